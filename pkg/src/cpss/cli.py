"""Command-line front end: ``cpss <command> ...``.

Every command prints plain text by default and a JSON object with
``--json``.  Exit status is 0 on success, 1 on a domain error (bad input
for the mathematics, or data beyond the tables) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import format_rational
from .errors import DomainError
from .geom import PrimQuery, describe_link, exists_prim
from .jtheory import (
    DEFAULT_KMAX,
    atiyah_todd,
    first_nonzero_diff,
    j_rp_order,
    jp_det,
    jp_det_check,
    jp_qs,
    m_rp,
    u_coeff,
    u_mod1,
    vandermonde_det,
)
from .specseq import VARIANTS, DESK_MAX_S, page, periodicity_check, render_chart
from .stems import ETA_LABELS, MAX_STEM, stem_group, stem_table
from .abelian import format_group


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True)


def _cmd_mk(a):
    mk = atiyah_todd(a.k)
    return {"k": a.k, "M_k": mk}, str(mk)


def _cmd_uk(a):
    val = u_coeff(a.k) if a.raw else u_mod1(a.k)
    return {"k": a.k, "raw": a.raw, "u_k": format_rational(val)}, format_rational(val)


def _cmd_ec(a):
    inv = first_nonzero_diff(a.s, a.kmax)
    text = f"k={inv.k} t={inv.t} e_C={format_rational(inv.eC)} order={inv.order}"
    if inv.leaves_grid:
        text += " (survives the range)"
    if inv.capped:
        text += f" (k capped at {a.kmax})"
    return inv.to_json(), text


def _cmd_page(a):
    pg = page(a.variant, a.r, a.max_s, a.max_m, a.p)
    fmt = "json" if a.json else a.format
    if fmt == "json":
        return pg.to_json(), None
    if fmt == "chart":
        return pg.to_json(), render_chart(pg, labels=a.labels)
    lines = [f"E^{a.r} ({a.variant.upper()}{'' if a.p is None else f', p={a.p}'})"]
    for (s, m), cell in sorted(pg.cells.items()):
        line = f"s={s:<2} m={m:<2} {cell.text(labels=a.labels)}"
        if cell.reason:
            line += f"  [{cell.reason}]"
        lines.append(line)
    return pg.to_json(), "\n".join(lines)


def _cmd_periodicity(a):
    rep = periodicity_check(a.variant, a.r, a.k, a.p, a.max_s, a.max_m)
    text = f"{a.variant} r={a.r} k={a.k} shift={rep.shift}: {rep.status} ({rep.checked} comparisons)"
    if rep.mismatches:
        text += "\n" + "\n".join(f"  {m}" for m in rep.mismatches)
    return rep.to_json(), text


def _cmd_prim_exists(a):
    try:
        data = json.loads(Path(a.query).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read query {a.query}: {exc}") from exc
    v = exists_prim(PrimQuery.from_json(data))
    return v.to_json(), f"{v.answer}: {v.reason}"


def _cmd_jrp(a):
    m = m_rp(a.k)
    return {"k": a.k, "m": m, "order": j_rp_order(a.k)}, f"m({a.k})={m} |J(RP^{a.k - 1})|={2 ** m}"


def _cmd_jp_det(a):
    det = jp_det(a.p, a.n)
    ok = jp_det_check(a.p, a.n)
    closed = vandermonde_det(jp_qs(a.p, a.n))
    out = {"p": a.p, "n": a.n, "det": det, "closed_form": format_rational(closed), "check": ok}
    return out, f"det={det} closed_form={format_rational(closed)} check={'ok' if ok else 'FAILED'}"


def _cmd_stems(a):
    lines = []
    for m in range(MAX_STEM + 1):
        G = stem_group(m)
        eta = f"  ∘η: {ETA_LABELS[m]}" if m < MAX_STEM else ""
        lines.append(f"π^s({m}) = {format_group(G, labels=True)}{eta}")
    return stem_table(), "\n".join(lines)


def _cmd_link(a):
    inv = first_nonzero_diff(a.s)
    text = describe_link(a.s)
    return {**inv.to_json(), "report": text}, text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpss",
                                     description="Invariants of the CP/RP filtration spectral sequences.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--out", metavar="FILE", help="also write the output to FILE")
    # SUPPRESS so a subcommand's default does not undo a flag given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS,
                        help="also write the output to FILE")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("mk", _cmd_mk, "Atiyah-Todd number M_k").add_argument("k", type=int)
    p = add("uk", _cmd_uk, "u_k mod 1")
    p.add_argument("k", type=int)
    p.add_argument("--raw", action="store_true", help="do not reduce mod 1")
    p = add("ec", _cmd_ec, "e_C of the first nonvanishing d on ι_s")
    p.add_argument("s", type=int)
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p = add("page", _cmd_page, "E¹ or E² page")
    p.add_argument("--variant", choices=VARIANTS, default="cp")
    p.add_argument("--r", type=int, choices=(1, 2), required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--max-s", type=int, default=6)
    p.add_argument("--max-m", type=int, default=MAX_STEM)
    p.add_argument("--format", choices=("text", "json", "chart"), default="text")
    p.add_argument("--labels", action="store_true", help="show generator names")
    p = add("periodicity", _cmd_periodicity, "check periodicity of a page")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="cp")
    p.add_argument("--max-s", type=int, default=DESK_MAX_S)
    p.add_argument("--max-m", type=int, default=MAX_STEM)
    add("prim-exists", _cmd_prim_exists, "answer a prim-map existence query").add_argument(
        "--query", required=True, metavar="FILE")
    add("jrp", _cmd_jrp, "order of J(RP^{k-1})").add_argument("k", type=int)
    p = add("jp-det", _cmd_jp_det, "binomial determinant for J_p(CP^n)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    add("stems", _cmd_stems, "the stable stem table")
    add("link", _cmd_link, "narrative for ι_s").add_argument("s", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "format", None) == "chart" and args.json:
        print("error: --format chart and --json are exclusive", file=sys.stderr)
        return 2
    try:
        data, text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = _dump(data) if args.json or text is None else text
    print(out)
    if args.out:
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
