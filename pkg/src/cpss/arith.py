"""Integer and rational helpers: p-adic valuations, Q/Z representatives,
binomials and exact determinants.

Integers are plain Python ``int`` and rationals are
:class:`fractions.Fraction`; both are arbitrary precision, immutable and
always kept in lowest terms.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, gcd, lcm

from .errors import DomainError

__all__ = [
    "Fraction",
    "is_prime",
    "primes_up_to",
    "nu_p",
    "p_part",
    "rat_mod1",
    "rational",
    "binomial",
    "factorial",
    "gcd",
    "lcm",
    "bareiss_det",
    "format_rational",
]


def is_prime(p: int) -> bool:
    """Trial-division primality test; fine for the small primes used here."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n: int) -> list[int]:
    return [p for p in range(2, n + 1) if is_prime(p)]


def _check(p: int, n: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError(f"valuation undefined for n={n}")


def nu_p(p: int, n: int) -> int:
    """Largest ``e`` with ``p**e`` dividing ``n``.

    >>> nu_p(2, 24), nu_p(3, 24), nu_p(5, 2880)
    (3, 1, 1)
    """
    _check(p, n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def p_part(p: int, n: int) -> int:
    """``p**nu_p(p, n)``, the p-primary factor of ``n``."""
    return p ** nu_p(p, n)


def rational(num: int | Fraction, den: int = 1) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def rat_mod1(x: Fraction | int) -> Fraction:
    """Canonical representative of ``x`` in Q/Z, lying in ``[0, 1)``.

    >>> rat_mod1(Fraction(11, 6)), rat_mod1(Fraction(-1, 2)), rat_mod1(3)
    (Fraction(5, 6), Fraction(1, 2), Fraction(0, 1))
    """
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def bareiss_det(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def format_rational(x: Fraction | int) -> str:
    """``a/b`` in lowest terms; integers without the ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
