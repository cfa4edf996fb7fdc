"""Atiyah-Todd numbers, the ``u_k`` coefficients and e_C-invariants of the
first nonvanishing differential on the diagonal generators.

``M_k`` is the order of the tautological class in ``J(CP^{k-1})``; the
first differential that does not vanish on ``ι_s`` is ``d^k`` for the
largest ``k`` with ``M_k | s+1``, and its complex e-invariant is
``t·u_k mod 1`` where ``s+1 ≡ t·M_k (mod M_{k+1})`` and ``u_k`` is the
coefficient of ``z^k`` in ``(log(1+z)/z)^{M_k}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import bareiss_det, binomial, factorial, is_prime, p_part, primes_up_to, rat_mod1
from .errors import DomainError
from .series import coefficient, log1p_over_z, series_pow

DEFAULT_KMAX = 8


def _nu_p_atiyah_todd(k: int, p: int) -> int:
    top = (k - 1) // (p - 1)
    best = 0
    for r in range(1, top + 1):
        v, rr = 0, r
        while rr % p == 0:
            rr //= p
            v += 1
        best = max(best, r + v)
    return best


# lru_cache is thread-safe for concurrent readers; values are immutable ints.
@lru_cache(maxsize=None)
def atiyah_todd(k: int) -> int:
    """The Atiyah-Todd number ``M_k``.

    >>> [atiyah_todd(k) for k in range(1, 7)]
    [1, 2, 24, 24, 2880, 2880]
    """
    if k < 1:
        raise DomainError("M_k is defined for k >= 1")
    out = 1
    for p in primes_up_to(k):
        out *= p ** _nu_p_atiyah_todd(k, p)
    return out


def atiyah_todd_p(k: int, p: int) -> int:
    """p-primary part ``(M_k)_p``."""
    return p_part(p, atiyah_todd(k))


@lru_cache(maxsize=None)
def u_coeff(k: int) -> Fraction:
    """Raw coefficient of ``z^k`` in ``(log(1+z)/z)^{M_k}`` (not reduced mod 1)."""
    if k < 1:
        raise DomainError("u_k is defined for k >= 1")
    return coefficient(series_pow(log1p_over_z(k), atiyah_todd(k)), k)


def u_mod1(k: int) -> Fraction:
    return rat_mod1(u_coeff(k))


def first_index(s: int, k_max: int | None = None) -> int:
    """Largest ``k`` (at most ``k_max`` if given) with ``M_k | s+1``."""
    if s < 1:
        raise DomainError("diagonal generators start at s = 1")
    k = 1
    while (k_max is None or k < k_max) and (s + 1) % atiyah_todd(k + 1) == 0:
        k += 1
    return k


@dataclass(frozen=True)
class DiffInvariant:
    """The first nonvanishing differential ``d^k(ι_s)``.

    ``eC`` is ``t·u_k mod 1``; ``eC_negated`` is the opposite sign
    convention, with the same order.  ``leaves_grid`` is set when the target
    column ``s-k`` would be below the first column, in which case the
    generator survives the tabulated range and ``eC`` is only formal.
    """

    s: int
    k: int
    t: int
    eC: Fraction
    order: int
    leaves_grid: bool = False
    capped: bool = False

    @property
    def eC_negated(self) -> Fraction:
        return rat_mod1(-self.eC)

    @property
    def target_column(self) -> int:
        return self.s - self.k

    @property
    def target_stem(self) -> int:
        return 2 * self.k - 1

    @property
    def status(self) -> str:
        return "survives-range" if self.leaves_grid else "computed"

    def p_order(self, p: int) -> int:
        """Order of the p-primary component of the e_C value."""
        return p_part(p, self.order)

    def to_json(self) -> dict:
        out = {"s": self.s, "status": self.status, "k": self.k, "t": self.t,
               "eC": str(self.eC), "eC_negated": str(self.eC_negated),
               "order": self.order}
        if self.capped:
            out["k_capped"] = True
        return out


def first_nonzero_diff(s: int, k_max: int = DEFAULT_KMAX) -> DiffInvariant:
    """e_C data for the first differential that does not vanish on ``ι_s``.

    >>> d = first_nonzero_diff(3)
    >>> (d.k, d.t, d.eC, d.order)
    (2, 2, Fraction(5, 6), 6)
    """
    k = first_index(s, k_max)
    mk, mk1 = atiyah_todd(k), atiyah_todd(k + 1)
    t = ((s + 1) // mk) % (mk1 // mk)
    eC = rat_mod1(t * u_coeff(k))
    capped = k == k_max and (s + 1) % mk1 == 0
    return DiffInvariant(s=s, k=k, t=t, eC=eC, order=eC.denominator,
                         leaves_grid=s - k < 1, capped=capped)


# --------------------------------------------------------------------------
# real projective side


def m_rp(k: int) -> int:
    """``#{1 <= p < k : p ≡ 0,1,2,3,4 (mod 8)}``."""
    if k < 1:
        raise DomainError("m(k) is defined for k >= 1")
    return sum(1 for p in range(1, k) if p % 8 in (0, 1, 2, 3, 4))


def j_rp_order(k: int) -> int:
    """``|J(RP^{k-1})| = 2^{m(k)}``."""
    return 2 ** m_rp(k)


# --------------------------------------------------------------------------
# the binomial matrix showing J_p(CP^n) is a p-group


def jp_qs(p: int, n: int) -> list[int]:
    return [p * i + 1 for i in range(1, n + 2)]


def jp_matrix(p: int, n: int) -> list[list[int]]:
    """``(n+1)×(n+1)`` matrix with entry ``(j, i) = C(q_i, j)``, ``q_i = p·i + 1``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("n must be at least 1")
    qs = jp_qs(p, n)
    return [[binomial(q, j) for q in qs] for j in range(n + 1)]


def vandermonde_det(qs: list[int]) -> Fraction:
    """``∏_{v<u} (q_u - q_v) / ∏_{j<m} j!`` for ``m = len(qs)``."""
    if not qs:
        raise DomainError("need at least one node")
    num = 1
    for u in range(len(qs)):
        for v in range(u):
            num *= qs[u] - qs[v]
    den = 1
    for j in range(len(qs)):
        den *= factorial(j)
    return Fraction(num, den)


def jp_det(p: int, n: int) -> int:
    return bareiss_det(jp_matrix(p, n))


def jp_det_check(p: int, n: int) -> bool:
    """``|det| == p^C(n+1, 2)`` and the determinant matches the closed form."""
    det = jp_det(p, n)
    return abs(det) == p ** binomial(n + 1, 2) and det == vandermonde_det(jp_qs(p, n))
