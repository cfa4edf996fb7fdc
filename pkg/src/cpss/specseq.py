"""E¹ and E² pages of the CP (cooriented, codimension 1) and RP (codimension 0)
filtration spectral sequences, with their p-localizations.

Coordinates
-----------
Cells are indexed by ``(s, m)``: ``s >= 1`` is the column (the filtration
index, so ``ι_s`` generates the diagonal cell ``(s, 0)``) and ``m`` is the
stem of the stable homotopy group sitting there.  For the CP filtration the
bigraded group ``E¹_{p,q} = π^s(q - p)`` has ``s = p`` and ``m = q - p``; a
differential ``d^r`` goes from ``(s, m)`` to ``(s - r, m + 2r - 1)``.  For the
RP filtration ``E¹_{p,q} = π^s(q)`` has ``s = p``, ``m = q`` and ``d¹`` goes
from ``(s, m)`` to ``(s - 1, m)``.

The two printed charts use shifted conventions, translated here and nowhere
else (``i`` is the chart column, ``j`` the chart row)::

    E¹ chart:  (i, j) holds π^s(j - i - 1)   ->  s = i + 1, m = j - i - 1
    E² chart:  (i, j) holds stem j - i       ->  s = i + 1, m = j - i
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import (
    Element,
    FinAbGroup,
    GroupHom,
    PartialHom,
    format_group,
    homology_sq,
    is_isomorphic,
    p_component,
)
from .errors import DomainError, OutOfTableError
from .jtheory import atiyah_todd, first_nonzero_diff, j_rp_order
from .arith import p_part
from .stems import MAX_STEM, eta_compose, stem_group

CP = "cp"
RP = "rp"
VARIANTS = (CP, RP)

# d¹ in the RP filtration is multiplication by 2 out of the columns with this
# parity and zero out of the others.  With 0 the E² row 0 reads Z_2, 0, Z_2, ...
RP_DOUBLING_PARITY = 0

DESK_MAX_S = 12

COMPUTED = "computed"
INDETERMINATE = "indeterminate"


def e1_chart_position(i: int, j: int) -> tuple[int, int]:
    return i + 1, j - i - 1


def e2_chart_position(i: int, j: int) -> tuple[int, int]:
    return i + 1, j - i


def _check_variant(variant: str) -> str:
    v = variant.lower()
    if v not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected 'cp' or 'rp'")
    return v


def e1_group(variant: str, s: int, m: int) -> FinAbGroup:
    """The group in cell ``(s, m)``; the same stem grid for both filtrations."""
    _check_variant(variant)
    if s < 1:
        return FinAbGroup()
    G = stem_group(m)
    if m == 0:
        return G.with_names((f"ι_{s}",))
    return G


def _target(variant: str, s: int, m: int) -> tuple[int, int]:
    return (s - 1, m + 1) if variant == CP else (s - 1, m)


def d1(variant: str, s: int, m: int) -> GroupHom | PartialHom:
    """``d¹`` out of cell ``(s, m)``.

    CP: zero for odd ``s``; ``x ↦ x∘η`` for even ``s``.  RP: multiplication
    by 2 when ``s ≡ RP_DOUBLING_PARITY (mod 2)``, zero otherwise.  Out of the
    first column there is no target, and the map is zero into the trivial group.
    """
    variant = _check_variant(variant)
    if s < 1 or m < 0:
        raise DomainError(f"no cell ({s}, {m})")
    dom = e1_group(variant, s, m)
    ts, tm = _target(variant, s, m)
    if ts < 1:
        return GroupHom.zero(dom, FinAbGroup())
    cod = e1_group(variant, ts, tm)
    if variant == CP:
        if s % 2:
            return GroupHom.zero(dom, cod)
        eta = eta_compose(m)
        if isinstance(eta, PartialHom):
            return PartialHom(dom, cod, eta.images, eta.note)
        return GroupHom(dom, cod, eta.matrix)
    if s % 2 == RP_DOUBLING_PARITY:
        return GroupHom(dom, cod, GroupHom.scalar(dom, 2).matrix)
    return GroupHom.zero(dom, cod)


@dataclass(frozen=True)
class Cell:
    group: FinAbGroup
    status: str = COMPUTED
    reason: str | None = None

    def text(self, labels: bool = False) -> str:
        if self.status == INDETERMINATE:
            return "?"
        return format_group(self.group, labels=labels)

    def to_json(self) -> dict:
        out = {"group": self.group.to_json(), "text": self.text(),
               "status": self.status}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class Page:
    variant: str
    r: int
    max_s: int
    max_m: int
    cells: dict[tuple[int, int], Cell]
    p: int | None = None
    differentials: dict[tuple[int, int], GroupHom | PartialHom] = field(default_factory=dict)

    def cell(self, s: int, m: int) -> Cell:
        if m < 0 or s < 1:
            return Cell(FinAbGroup())
        try:
            return self.cells[s, m]
        except KeyError:
            raise OutOfTableError(f"cell ({s}, {m}) outside this page") from None

    def __getitem__(self, key: tuple[int, int]) -> FinAbGroup:
        return self.cell(*key).group

    def to_json(self) -> dict:
        out: dict = {
            "variant": self.variant, "r": self.r, "p": self.p,
            "max_s": self.max_s, "max_m": self.max_m,
            "cells": {f"{s},{m}": c.to_json() for (s, m), c in sorted(self.cells.items())},
        }
        if self.differentials:
            out["differentials"] = {f"{s},{m}": _hom_json(f)
                                    for (s, m), f in sorted(self.differentials.items())}
        return out


def _hom_json(f: GroupHom | PartialHom) -> dict:
    if isinstance(f, PartialHom):
        return {"partial": True, "images": [None if c is None else list(c) for c in f.images]}
    return {"matrix": [list(r) for r in f.matrix]}


def _localize_cell(cell: Cell, p: int | None) -> Cell:
    if p is None or cell.status != COMPUTED:
        return cell
    return Cell(p_component(cell.group, p), cell.status, cell.reason)


def _check_range(max_s: int, max_m: int) -> None:
    if max_m > MAX_STEM:
        raise OutOfTableError(f"stems beyond {MAX_STEM} are not tabulated")
    if max_s < 1 or max_m < 0:
        raise DomainError("page range must have max_s >= 1 and max_m >= 0")


def e1_page(variant: str, max_s: int, max_m: int, p: int | None = None) -> Page:
    variant = _check_variant(variant)
    _check_range(max_s, max_m)
    cells, diffs = {}, {}
    for s in range(1, max_s + 1):
        for m in range(max_m + 1):
            cells[s, m] = _localize_cell(Cell(e1_group(variant, s, m)), p)
            try:
                f = d1(variant, s, m)
            except OutOfTableError:
                continue
            if p is not None:
                f = p_component(f, p)
            diffs[s, m] = f
    return Page(variant, 1, max_s, max_m, cells, p, diffs)


def e2_cell(variant: str, s: int, m: int, p: int | None = None) -> Cell:
    """``ker(d¹ out of (s, m)) / im(d¹ into (s, m))``, optionally p-localized.

    Localization is exact, so the p-local cell is computed from the
    localized maps; partly known maps often become known there.
    """
    variant = _check_variant(variant)
    if m < 0 or s < 1:
        return Cell(FinAbGroup())
    here = e1_group(variant, s, m)
    src_m = m - 1 if variant == CP else m
    if variant == CP and p is not None and p != 2:
        # x∘η has order dividing 2, so d¹ vanishes on odd torsion
        return Cell(p_component(here, p))
    try:
        outgoing = d1(variant, s, m)
    except OutOfTableError as exc:
        if variant != CP or s % 2 == 0:
            return Cell(here, INDETERMINATE, f"outgoing d¹: {exc}")
        # odd CP columns carry d¹ = 0 whatever the target
        outgoing = GroupHom.zero(here, FinAbGroup())
    if src_m >= 0:
        incoming = d1(variant, s + 1, src_m)
    else:
        incoming = GroupHom.zero(FinAbGroup(), here)
    if p is not None:
        outgoing, incoming = p_component(outgoing, p), p_component(incoming, p)
        here = p_component(here, p)
    for name, f in (("outgoing", outgoing), ("incoming", incoming)):
        if not f.is_total():
            return Cell(here, INDETERMINATE, f"{name} d¹ has unknown images ({f.note})")
    group = homology_sq(incoming, outgoing).group()
    return Cell(group if p is None else p_component(group, p))


def e2_page(variant: str, max_s: int, max_m: int, p: int | None = None) -> Page:
    variant = _check_variant(variant)
    _check_range(max_s, max_m)
    cells = {(s, m): e2_cell(variant, s, m, p)
             for s in range(1, max_s + 1) for m in range(max_m + 1)}
    return Page(variant, 2, max_s, max_m, cells, p)


def page(variant: str, r: int, max_s: int, max_m: int, p: int | None = None) -> Page:
    if r == 1:
        return e1_page(variant, max_s, max_m, p)
    if r == 2:
        return e2_page(variant, max_s, max_m, p)
    raise DomainError("only the E¹ and E² pages are computed")


def p_localized_page(p: int, variant: str, r: int, max_s: int, max_m: int) -> Page:
    return page(variant, r, max_s, max_m, p)


def e2_closed_form(variant: str, s: int, m: int) -> FinAbGroup:
    """The same cell through the parity shortcut (CP only).

    Even ``s``: ``ker(η: π^s(m) → π^s(m+1))``; odd ``s``:
    ``coker(η: π^s(m-1) → π^s(m))``.
    """
    from .abelian import cokernel, kernel

    if _check_variant(variant) != CP:
        raise DomainError("closed form is stated for the CP filtration")
    if s % 2 == 0:
        eta = eta_compose(m)
        return kernel(eta)
    if m == 0:
        return stem_group(0)
    return cokernel(eta_compose(m - 1))


# --------------------------------------------------------------------------
# periodicity


UNTESTABLE = "untestable at desk scale"


@dataclass(frozen=True)
class PeriodicityReport:
    variant: str
    r: int
    k: int
    p: int | None
    shift: int
    status: str
    checked: int = 0
    mismatches: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"variant": self.variant, "r": self.r, "k": self.k, "p": self.p,
                "shift": self.shift, "status": self.status, "checked": self.checked,
                "mismatches": list(self.mismatches)}


def _map_signature(f: GroupHom | PartialHom):
    if isinstance(f, GroupHom) and f.is_zero():
        return "zero"
    if isinstance(f, PartialHom):
        return ("partial", f.domain.orders, f.codomain.orders, f.images)
    return (f.domain.orders, f.codomain.orders, f.matrix)


def period(variant: str, k: int, p: int | None = None) -> int:
    variant = _check_variant(variant)
    full = atiyah_todd(k) if variant == CP else j_rp_order(k)
    return full if p is None else p_part(p, full)


def periodicity_check(variant: str = CP, r: int = 1, k: int = 2, p: int | None = None,
                      max_s: int = DESK_MAX_S, max_m: int = MAX_STEM) -> PeriodicityReport:
    """Compare every cell (and for ``r = 1`` every d¹) with its translate by the period.

    The period is ``M_k`` (CP) or ``|J(RP^{k-1})|`` (RP), replaced by its
    p-primary part when ``p`` is given, in which case cells are compared
    after p-localization.
    """
    variant = _check_variant(variant)
    if r not in (1, 2):
        raise DomainError("only r = 1, 2 are computed")
    if r > k - 1:
        raise DomainError(f"periodicity with period from k={k} only holds for r <= {k - 1}")
    shift = period(variant, k, p)
    if shift + 1 > max_s:
        return PeriodicityReport(variant, r, k, p, shift, UNTESTABLE)
    pg = page(variant, r, max_s, max_m, p)
    mismatches, checked = [], 0
    for s in range(1, max_s - shift + 1):
        for m in range(max_m + 1):
            a, b = pg.cell(s, m), pg.cell(s + shift, m)
            checked += 1
            if a.status != b.status or (
                a.status == COMPUTED and not is_isomorphic(a.group, b.group)
            ):
                mismatches.append(f"E{r} cell ({s},{m}) {a.text()} vs ({s + shift},{m}) {b.text()}")
            if r == 1 and (s, m) in pg.differentials and (s + shift, m) in pg.differentials:
                if _map_signature(pg.differentials[s, m]) != _map_signature(pg.differentials[s + shift, m]):
                    mismatches.append(f"d1 at ({s},{m}) vs ({s + shift},{m})")
    status = "pass" if not mismatches else "fail"
    return PeriodicityReport(variant, r, k, p, shift, status, checked, tuple(mismatches))


# --------------------------------------------------------------------------
# pinned higher differentials


@dataclass(frozen=True)
class PinnedFact:
    """A fact about ``d²`` out of the diagonal cell ``(s, 0)``.

    ``source`` is the diagonal class the differential is evaluated on
    (``ι_s``, or ``2ι_s`` when ``d¹(ι_s) ≠ 0``).  ``order`` is the order of
    the image in its E² cell, ``component3`` says what it does on
    3-components.  ``representative`` is an element of the E¹ target stem
    (defined modulo the image of d¹), when the class is known exactly.
    ``chart_label`` is the same class in the printed chart's notation, where
    ``π^s(3)/⟨12ν⟩`` is drawn as the subgroup ``⟨2ν⟩`` via ``[x] ↦ 2x``.
    """

    s: int
    source: str
    description: str
    anchor: str
    target: tuple[int, int]
    component3: str
    order: int | None = None
    representative: Element | None = None
    chart_label: str | None = None

    def to_json(self) -> dict:
        return {"s": self.s, "source": self.source, "description": self.description,
                "anchor": self.anchor, "target": list(self.target),
                "order": self.order, "component3": self.component3,
                "representative": None if self.representative is None else str(self.representative),
                "chart_label": self.chart_label}


def _pinned_table() -> dict[int, PinnedFact]:
    nu = stem_group(3)
    return {
        3: PinnedFact(3, "ι_3", "d²(ι_3) is twice the generator of Z_12⟨2ν⟩, of order 6",
                      "E² chart: arrow labelled 2·2 out of chart column 2",
                      (1, 3), "epi", 6, 2 * nu.gen("ν"), "4ν"),
        4: PinnedFact(4, "2ι_4", "d²(2ι_4) is epimorphic on 3-components",
                      "E² chart: d² out of chart column 3", (2, 3), "epi"),
        5: PinnedFact(5, "ι_5", "d²(ι_5) has order 4 and zero 3-component",
                      "E² chart: d² out of chart column 4", (3, 3), "zero", 4),
        6: PinnedFact(6, "2ι_6", "d²(2ι_6) is epimorphic on 3-components",
                      "E² chart: d² out of chart column 5", (4, 3), "epi"),
    }


_PINNED = _pinned_table()


def pinned_d2(s: int) -> PinnedFact | None:
    return _PINNED.get(s)


def pinned_cross_check(s: int) -> bool:
    """Pinned order and 3-behaviour agree with the e_C computation."""
    fact = pinned_d2(s)
    if fact is None or fact.order is None:
        raise DomainError(f"no pinned order for s={s}")
    inv = first_nonzero_diff(s)
    if inv.k != 2:
        return False
    three = p_part(3, inv.order)
    return inv.order == fact.order and ((three > 1) == (fact.component3 == "epi"))


# --------------------------------------------------------------------------
# charts


E1_CHART_ROWS = range(1, 12)
E2_CHART_ROWS = range(1, 9)
CHART_COLS = range(0, 6)


def chart_cells(pg: Page, labels: bool = False) -> dict[tuple[int, int], str]:
    """Chart-indexed cell strings ``(i, j) -> text`` for a CP page."""
    if pg.variant != CP:
        raise DomainError("paper-style charts exist for the CP filtration only")
    pos = e1_chart_position if pg.r == 1 else e2_chart_position
    rows = E1_CHART_ROWS if pg.r == 1 else E2_CHART_ROWS
    out = {}
    for j in rows:
        for i in CHART_COLS:
            s, m = pos(i, j)
            if s > pg.max_s or m > pg.max_m:
                continue
            out[i, j] = pg.cell(s, m).text(labels)
    return out


def render_chart(pg: Page, labels: bool = False) -> str:
    """ASCII grid; CP pages use the printed chart layout, RP pages plain ``(s, m)``."""
    if pg.variant == CP:
        cells = chart_cells(pg, labels)
        rows = sorted({j for _, j in cells}, reverse=True)
        cols = sorted({i for i, _ in cells})
        head = ["j\\i"] + [str(i) for i in cols]
        body = [[str(j)] + [cells.get((i, j), "") for i in cols] for j in rows]
    else:
        head = ["m\\s"] + [str(s) for s in range(1, pg.max_s + 1)]
        body = [[str(m)] + [pg.cell(s, m).text(labels) for s in range(1, pg.max_s + 1)]
                for m in range(pg.max_m, -1, -1)]
    widths = [max(len(r[c]) for r in [head] + body) for c in range(len(head))]
    line = lambda r: " | ".join(x.rjust(w) for x, w in zip(r, widths))
    title = f"E^{pg.r} ({pg.variant.upper()}" + (f", p={pg.p})" if pg.p else ")")
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([title] + [line(r) for r in body] + [sep, line(head)])
