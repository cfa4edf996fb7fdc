"""Truncated formal power series with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 z + ... + c_T z^T`` modulo ``z^(T+1)``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, trunc: int) -> TruncatedSeries:
        return cls([1] + [0] * trunc)

    @classmethod
    def zero(cls, trunc: int) -> TruncatedSeries:
        return cls([0] * (trunc + 1))

    def __getitem__(self, k: int) -> Fraction:
        return coefficient(self, k)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def __pow__(self, e: int) -> TruncatedSeries:
        return series_pow(self, e)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def log1p_over_z(trunc: int) -> TruncatedSeries:
    """Taylor series of ``log(1+z)/z``: coefficient of ``z^j`` is ``(-1)^j/(j+1)``."""
    if trunc < 0:
        raise ValueError("truncation degree must be non-negative")
    return TruncatedSeries(Fraction((-1) ** j, j + 1) for j in range(trunc + 1))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated at the common degree."""
    if a.trunc != b.trunc:
        raise ValueError(f"truncation mismatch: {a.trunc} != {b.trunc}")
    x, y = a.coeffs, b.coeffs
    return TruncatedSeries(
        sum((x[i] * y[j - i] for i in range(j + 1)), Fraction(0))
        for j in range(a.trunc + 1)
    )


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """``a**e`` by binary exponentiation: O(log e) multiplications."""
    if e < 0:
        raise ValueError("negative exponent")
    result = TruncatedSeries.one(a.trunc)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def coefficient(a: TruncatedSeries, k: int) -> Fraction:
    if not 0 <= k <= a.trunc:
        raise IndexError(f"coefficient z^{k} outside truncation degree {a.trunc}")
    return a.coeffs[k]
