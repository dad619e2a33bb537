"""Krawtchouk polynomials K_{m,n,s} built three independent ways.

* :func:`k_definition` -- the alternating sum over the falling-factorial basis.
* :func:`k_from_generating_function` -- values at 0..m read off as the X^m
  coefficient of (1+(s-1)X)^(n-i) (1-X)^i, then Newton interpolation.
* :func:`k_three_term` -- the three-term recurrence started from K_0 and K_1.

All three return coefficient-identical :class:`UniPoly` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import (
    UniPoly,
    binomial,
    falling_basis,
    newton_interpolate,
    poly_compose_affine,
)

METHODS = ("definition", "gf", "recurrence")


@dataclass(frozen=True)
class KrawtchoukParams:
    """Length ``n``, alphabet size ``s`` and degree ``m``."""

    n: int
    s: int
    m: int

    def __post_init__(self):
        for name in ("n", "s", "m"):
            if not isinstance(getattr(self, name), int):
                raise TypeError(f"{name} must be an integer")
        if self.s < 2:
            raise ValueError(f"s must be >= 2, got {self.s}")
        if not 0 <= self.m <= self.n:
            raise ValueError(f"need 0 <= m <= n, got m={self.m}, n={self.n}")


@dataclass(frozen=True)
class ThreeTermCoefficients:
    a: Fraction
    b: Fraction


def three_term_coefficients(n: int, s: int, m: int) -> ThreeTermCoefficients:
    """a_m = m + (s-1)(n-m) and b_m = (s-1)(n-m+1)."""
    return ThreeTermCoefficients(Fraction(m + (s - 1) * (n - m)), Fraction((s - 1) * (n - m + 1)))


def k1_closed_form(n: int, s: int) -> UniPoly:
    return UniPoly((n * (s - 1), -s))


@lru_cache(maxsize=None)
def _definition(n: int, s: int, m: int) -> UniPoly:
    total = UniPoly()
    for j in range(m + 1):
        term = falling_basis(j) * poly_compose_affine(falling_basis(m - j), -1, n)
        total = total + term * ((-1) ** j * (s - 1) ** (m - j))
    return total


def definition_sum(n: int, s: int, m: int) -> UniPoly:
    """The defining alternating sum without the m <= n range check.

    Only the summation identity at its top index (K_{n,n-1,s}) needs this.
    """
    if m < 0 or n < 0 or s < 2:
        raise ValueError("need m, n >= 0 and s >= 2")
    return _definition(n, s, m)


def k_definition(params: KrawtchoukParams) -> UniPoly:
    """Sum_j (-1)^j P_j(X) P_{m-j}(n-X) (s-1)^(m-j)."""
    return _definition(params.n, params.s, params.m)


def _gf_factor_coeffs(n: int, s: int, i: int) -> list[int]:
    # integer coefficients of (1+(s-1)X)^(n-i) (1-X)^i
    left = [binomial(n - i, k) * (s - 1) ** k for k in range(n - i + 1)]
    right = [(-1) ** k * binomial(i, k) for k in range(i + 1)]
    out = [0] * (n + 1)
    for a, x in enumerate(left):
        for b, y in enumerate(right):
            out[a + b] += x * y
    return out


def k_value_gf(params: KrawtchoukParams, i: int) -> Fraction:
    """K_{m,n,s}(i) as the X^m coefficient of (1+(s-1)X)^(n-i) (1-X)^i."""
    if not 0 <= i <= params.n:
        raise ValueError(f"i must lie in [0, {params.n}], got {i}")
    return Fraction(_gf_factor_coeffs(params.n, params.s, i)[params.m])


def k_from_generating_function(params: KrawtchoukParams) -> UniPoly:
    points = [(i, k_value_gf(params, i)) for i in range(params.m + 1)]
    return newton_interpolate(points)


@lru_cache(maxsize=None)
def _three_term_family(n: int, s: int) -> tuple[UniPoly, ...]:
    family = [UniPoly.constant(1)]
    if n >= 1:
        family.append(k1_closed_form(n, s))
    x = UniPoly.x()
    for m in range(1, n):
        c = three_term_coefficients(n, s, m)
        nxt = (c.a - s * x) * family[m] - c.b * family[m - 1]
        family.append(nxt / (m + 1))
    return tuple(family)


def k_three_term(params: KrawtchoukParams) -> UniPoly:
    """(m+1) K_{m+1} = (a_m - sX) K_m - b_m K_{m-1}, from K_0 = 1 and K_1."""
    return _three_term_family(params.n, params.s)[params.m]


def krawtchouk(n: int, s: int, m: int, method: str = "definition") -> UniPoly:
    """Convenience front end: K_{m,n,s} by the named construction."""
    params = KrawtchoukParams(n, s, m)
    if method == "definition":
        return k_definition(params)
    if method == "gf":
        return k_from_generating_function(params)
    if method == "recurrence":
        return k_three_term(params)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def krawtchouk_family(n: int, s: int) -> tuple[UniPoly, ...]:
    """K_0, ..., K_n for fixed (n, s)."""
    return tuple(_definition(n, s, m) for m in range(n + 1))


def k_value_table(n: int, s: int, m_max: int) -> list[list[Fraction]]:
    """Rows m = 0..m_max of K_m(i), i = 0..n, filled by the value recurrence.

    Row 0 is all ones and row 1 comes from n(s-1) - s*i.  Each later row
    starts at C(n,m)(s-1)^m and proceeds left to right with
    K_m(i) = K_m(i-1) - K_{m-1}(i-1) - (s-1) K_{m-1}(i).
    """
    KrawtchoukParams(n, s, m_max)
    table = [[Fraction(1)] * (n + 1)]
    if m_max >= 1:
        table.append([Fraction(n * (s - 1) - s * i) for i in range(n + 1)])
    for m in range(2, m_max + 1):
        prev = table[m - 1]
        row = [Fraction(binomial(n, m) * (s - 1) ** m)]
        for i in range(1, n + 1):
            row.append(row[i - 1] - prev[i - 1] - (s - 1) * prev[i])
        table.append(row)
    return table


def leading_coefficient(params: KrawtchoukParams) -> Fraction:
    """(-s)^m / m!."""
    return Fraction((-params.s) ** params.m, math.factorial(params.m))
