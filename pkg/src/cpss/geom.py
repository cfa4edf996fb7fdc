"""Existence of prim maps with prescribed singular strata, and the splitting
of prim cobordism groups away from small primes.

A query fixes ``α ∈ π^s(n - 2r1)`` (the top stratum of the map) and
``β ∈ π^s(n - 2r2 - 1)`` (the top stratum on the boundary).  With
``d = r1 - r2``, such a map exists iff ``β - α·d^d(ι_{r1})`` lies in the
image of the lower differentials ``d^j``, ``j < d``, landing in the cell of
β, and, when ``d`` exceeds the first nonvanishing index, ``d^d`` is
defined on ``α`` at all.

Verdicts are three-valued.  Whenever the answer depends on a differential
or a composition product that is not tabulated, the verdict is ``Unknown``
and the reason names the missing piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .abelian import Element, FinAbGroup, direct_sum, format_group, in_subgroup, strip_primes
from .arith import primes_up_to
from .errors import DomainError, Indeterminate, OutOfTableError
from .jtheory import first_index, first_nonzero_diff
from .specseq import CP, e2_cell, pinned_d2
from .stems import MAX_STEM, eta_compose, stem_group

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class QueryVerdict:
    answer: str
    reason: str

    def __post_init__(self) -> None:
        if self.answer not in (YES, NO, UNKNOWN):
            raise DomainError(f"bad verdict {self.answer!r}")
        if self.answer == UNKNOWN and not self.reason:
            raise DomainError("an Unknown verdict needs a reason")

    def to_json(self) -> dict:
        return {"answer": self.answer, "reason": self.reason}


def _as_element(G: FinAbGroup, value, what: str) -> Element:
    if isinstance(value, Element):
        return G.element(value.coords)
    if isinstance(value, Mapping):
        x = G.zero()
        for name, coeff in value.items():
            try:
                x = x + int(coeff) * G.gen(name)
            except (KeyError, IndexError, ValueError) as exc:
                raise DomainError(f"{what}: no generator {name!r} in {format_group(G, True)}") from exc
        return x
    coords = [int(c) for c in value]
    if len(coords) != G.rank:
        raise DomainError(f"{what}: expected {G.rank} coordinates for {format_group(G)}")
    return G.element(coords)


@dataclass(frozen=True)
class PrimQuery:
    """``alpha``/``beta`` are coordinate lists or ``{generator: coefficient}``."""

    n: int
    r1: int
    r2: int
    alpha: object = field(default=())
    beta: object = field(default=())

    def __post_init__(self) -> None:
        n, r1, r2 = self.n, self.r1, self.r2
        if min(n, r1, r2) < 0:
            raise DomainError("n, r1, r2 must be non-negative")
        if r2 < 1:
            raise DomainError("r2 must be at least 1 (the boundary stratum index)")
        if not r2 < r1:
            raise DomainError("r2 < r1 required")
        if n - 2 * r1 < 0:
            raise DomainError("n - 2r1 must be non-negative")
        if n - 2 * r2 - 1 > MAX_STEM:
            raise OutOfTableError(f"β would live in π^s({n - 2 * r2 - 1}), beyond the table")

    @property
    def alpha_group(self) -> FinAbGroup:
        return stem_group(self.n - 2 * self.r1)

    @property
    def beta_group(self) -> FinAbGroup:
        return stem_group(self.n - 2 * self.r2 - 1)

    def alpha_element(self) -> Element:
        return _as_element(self.alpha_group, self.alpha or [0] * self.alpha_group.rank, "alpha")

    def beta_element(self) -> Element:
        return _as_element(self.beta_group, self.beta or [0] * self.beta_group.rank, "beta")

    @classmethod
    def from_json(cls, data: Mapping) -> PrimQuery:
        try:
            return cls(int(data["n"]), int(data["r1"]), int(data["r2"]),
                       data.get("alpha", ()), data.get("beta", ()))
        except KeyError as exc:
            raise DomainError(f"query is missing field {exc.args[0]!r}") from exc


# --------------------------------------------------------------------------
# ingredients


@dataclass(frozen=True)
class _Image:
    """Known generators of the lower-differential image, plus what is missing."""

    gens: tuple[Element, ...]
    missing: tuple[str, ...]

    @property
    def complete(self) -> bool:
        return not self.missing


def _lower_image(q: PrimQuery) -> _Image:
    B = q.beta_group
    gens: list[Element] = []
    missing: list[str] = []
    for j in range(1, q.r1 - q.r2):
        s, m = q.r2 + j, q.n - 2 * q.r2 - 2 * j
        if m < 0:
            continue
        if j == 1:
            if s % 2:
                continue
            eta = eta_compose(m)
            for g in range(eta.domain.rank):
                col = eta.known_columns()[g]
                if col is None:
                    missing.append(f"η-action on π^s({m})")
                else:
                    gens.append(B.element(col))
            continue
        cell = e2_cell(CP, s, m)
        if cell.status == "computed" and cell.group.is_trivial():
            continue
        missing.append(f"d^{j} out of cell ({s}, {m})")
    return _Image(tuple(gens), tuple(dict.fromkeys(missing)))


def d2_candidates(s: int) -> list[Element] | None:
    """Representatives in ``π^s(3)`` for ``d²(ι_s)`` when it is the first
    nonvanishing differential.

    A pinned class is returned alone.  Otherwise the e_C value fixes the
    class up to sign: e_C(ν) = 1/12 makes e_C injective on the E² cell
    ``π^s(3)/⟨12ν⟩``, so ``c·ν`` with ``c = 12·e_C`` is a representative.
    ``None`` when ``d²`` is not the first differential.
    """
    inv = first_nonzero_diff(s)
    if inv.k != 2:
        return None
    fact = pinned_d2(s)
    if fact is not None and fact.representative is not None:
        return [fact.representative]
    nu = stem_group(3).gen("ν")
    c = int(inv.eC * 12)
    return [c * nu, -c * nu]


# --------------------------------------------------------------------------
# the query


def _decide(q: PrimQuery, image: _Image, main: list[Element], main_note: str) -> QueryVerdict:
    beta = q.beta_element()
    verdicts = set()
    for T in main:
        R = beta - T
        if R.is_zero() or in_subgroup(R, image.gens):
            verdicts.add(YES)
        elif image.complete:
            verdicts.add(NO)
        else:
            verdicts.add(UNKNOWN)
    if verdicts == {YES}:
        return QueryVerdict(YES, f"β - α·d^{q.r1 - q.r2}(ι_{q.r1}) lies in the lower image{main_note}")
    if verdicts == {NO}:
        return QueryVerdict(NO, f"β - α·d^{q.r1 - q.r2}(ι_{q.r1}) is not in the lower image{main_note}")
    if UNKNOWN in verdicts:
        return QueryVerdict(UNKNOWN, "lower image not fully known: " + ", ".join(image.missing))
    return QueryVerdict(UNKNOWN, "answer depends on the sign of d², which is not pinned")


def exists_prim(q: PrimQuery, extra_image: Sequence[Element] = ()) -> QueryVerdict:
    """Whether a prim map realizing the strata ``(α, β)`` exists.

    ``extra_image`` adds generators to the lower-differential image; it is
    there to exercise monotonicity.
    """
    alpha, beta = q.alpha_element(), q.beta_element()
    d = q.r1 - q.r2
    if alpha.is_zero() and beta.is_zero():
        return QueryVerdict(YES, "zero classes: the empty map is a witness")
    k = first_index(q.r1)
    try:
        image = _lower_image(q)
    except OutOfTableError as exc:
        return QueryVerdict(UNKNOWN, str(exc))
    image = _Image(image.gens + tuple(q.beta_group.element(x.coords) for x in extra_image),
                   image.missing)
    B = q.beta_group
    stem_a = q.n - 2 * q.r1

    if d > k:
        # the differential must first be defined on α
        if k == 1:
            try:
                a_eta = eta_compose(stem_a)(alpha)
            except Indeterminate:
                return QueryVerdict(UNKNOWN, f"η-action on π^s({stem_a}) is not known on α")
            if not a_eta.is_zero():
                return QueryVerdict(NO, f"d¹(α·ι_{q.r1}) = α∘η ≠ 0, so d^{d} is not defined on α")
        if k == 2 and stem_a == 0 and not alpha.is_zero():
            reps = d2_candidates(q.r1)
            target = PrimQuery(q.n, q.r1, q.r1 - 2)
            below = _lower_image(target)
            a = alpha.coords[0]
            hits = [(a * T).is_zero() or in_subgroup(a * T, below.gens) for T in reps]
            if not any(hits) and below.complete:
                coeff = "" if a == 1 else str(a)
                return QueryVerdict(NO, f"d²({coeff}ι_{q.r1}) ≠ 0 in E², so d^{d} is not defined on α")
        fact = pinned_d2(q.r1)
        if d == 2 and fact is not None and not alpha.is_zero():
            return QueryVerdict(UNKNOWN, f"d^2 data unavailable: only known that {fact.description}")
        if not alpha.is_zero():
            return QueryVerdict(UNKNOWN, f"d^{d} data unavailable")
        return _decide(q, image, [B.zero()], "")

    if d < k:
        return _decide(q, image, [B.zero()], f" (d^{d}(ι_{q.r1}) = 0 since M_{d + 1} | {q.r1 + 1})")
    if alpha.is_zero() or B.is_trivial():
        return _decide(q, image, [B.zero()], "")
    if d == 1:
        try:
            T = eta_compose(stem_a)(alpha)
        except Indeterminate:
            return QueryVerdict(UNKNOWN, f"η-action on π^s({stem_a}) is not known on α")
        return _decide(q, image, [T], " (d¹(ι) = η)")
    if d == 2 and stem_a == 0:
        reps = d2_candidates(q.r1)
        a = alpha.coords[0]
        return _decide(q, image, [a * T for T in reps], "")
    if d == 2:
        return QueryVerdict(UNKNOWN, "composition product α·d²(ι) is not tabulated")
    return QueryVerdict(UNKNOWN, f"d^{d} data unavailable beyond its e_C-invariant")


# --------------------------------------------------------------------------
# splitting modulo small primes


def prim_group_mod_cr(n: int, r: int) -> FinAbGroup:
    """``⊕_{i<=r} π^s(n - 2i)`` with the p-parts for ``p <= r+1`` removed."""
    if r < 0 or n < 0:
        raise DomainError("n and r must be non-negative")
    summands = []
    for i in range(r + 1):
        m = n - 2 * i
        if m > MAX_STEM:
            raise OutOfTableError(f"π^s({m}) is beyond the table")
        summands.append(stem_group(m))
    return strip_primes(direct_sum(*summands), primes_up_to(r + 1)).isomorphism_type()


# --------------------------------------------------------------------------
# narrative


def describe_link(s: int) -> str:
    """What the first nonvanishing differential says about ``ι_s``."""
    if s < 2:
        raise DomainError("s >= 2 required")
    inv = first_nonzero_diff(s)
    k = inv.k
    if k == 1:
        return (f"s={s}: d¹(ι_{s}) = η ≠ 0; the boundary of the isolated Σ^{{1_{s - 1}}} "
                f"germ carries a nonbounding framed circle of folds")
    parts = [f"s={s}: d{_sup(k)} nonzero", f"order {inv.order}",
             f"e_C = {inv.eC} (or {inv.eC_negated} with the opposite sign)"]
    fact = pinned_d2(s) if k == 2 else None
    if fact is not None and fact.chart_label is not None:
        parts.append(f"class {fact.chart_label} (quadruple of ν up to odd part; "
                     f"{fact.representative} modulo 12ν)")
    if k == 2 and inv.p_order(3) == 1:
        parts.append("2-primary only")
    parts.append(f"the class lies in π^s({2 * k - 1}) and belongs to the image of J")
    if inv.leaves_grid:
        parts.append("the target column is below the first one, so ι_s survives the range")
    return ", ".join(parts)


def _sup(k: int) -> str:
    return str(k).translate(str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹"))
