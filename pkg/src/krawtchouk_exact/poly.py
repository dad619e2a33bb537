"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` (always reduced, positive
denominator).  A :class:`UniPoly` stores its coefficients constant term
first, with trailing zeros stripped; the zero polynomial has an empty
coefficient tuple and degree ``-inf``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
ZERO_DEGREE = -math.inf


def binomial(a: int, b: int) -> int:
    """C(a, b) for nonnegative integers; 0 when b > a."""
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(a, b)


def _normalize(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class UniPoly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self._c = _normalize(coeffs)

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> Union[int, float]:
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def coefficient(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, x)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == _normalize((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            coef = str(c) if c.denominator == 1 else f"({c})"
            terms.append(coef if k == 0 else f"{coef}*X" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self._c)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if isinstance(other, UniPoly):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "UniPoly":
        return scale(self, Fraction(1) / Fraction(c))

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self._c) if k)


def _coerce(p) -> UniPoly:
    if isinstance(p, UniPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return UniPoly.constant(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def add(p: UniPoly, q: UniPoly) -> UniPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    return UniPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])


def scale(p: UniPoly, c: Scalar) -> UniPoly:
    c = Fraction(c)
    if c == 0:
        return UniPoly()
    return UniPoly(c * x for x in p.coeffs)


def multiply(p: UniPoly, q: UniPoly) -> UniPoly:
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return UniPoly()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return UniPoly(out)


def poly_eval(p: UniPoly, x: Scalar) -> Fraction:
    """Exact Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_compose_affine(p: UniPoly, a: Scalar, b: Scalar) -> UniPoly:
    """Return p(aX + b)."""
    inner = UniPoly((b, a))
    acc = UniPoly()
    for c in reversed(p.coeffs):
        acc = acc * inner + c
    return acc


@lru_cache(maxsize=None)
def falling_basis(j: int) -> UniPoly:
    """P_j(X) = X(X-1)...(X-j+1)/j!, so that P_j(i) = C(i, j) for i >= j."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    p = UniPoly.constant(1)
    for r in range(j):
        p = p * UniPoly((-r, 1))
    return p / math.factorial(j)


def newton_interpolate(points: Sequence[tuple[Scalar, Scalar]]) -> UniPoly:
    """Interpolating polynomial of degree < len(points) via divided differences."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in interpolation points")
    dd = [Fraction(y) for _, y in points]
    n = len(xs)
    # dd[k] becomes f[x_0, ..., x_k] in place
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level])
    p = UniPoly()
    for k in range(n - 1, -1, -1):
        p = p * UniPoly((-xs[k], 1)) + dd[k]
    return p


def poly_divmod(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Euclidean division over the rationals: p = quot * q + rem, deg rem < deg q."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lc = q.coeffs[-1]
    quot = [Fraction(0)] * max(len(rem) - dq, 0)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq] / lc
        quot[k] = c
        if c:
            for j, y in enumerate(q.coeffs):
                rem[k + j] -= c * y
    return UniPoly(quot), UniPoly(rem[:dq])


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero if both are zero)."""
    while not q.is_zero():
        p, q = q, poly_divmod(p, q)[1]
    return p / p.leading_coefficient if not p.is_zero() else p


def integer_primitive(p: UniPoly) -> tuple[int, ...]:
    """Integer coefficients of the primitive part of p, sign of the leading coefficient kept.

    The result is p multiplied by a positive rational, so signs of values
    are unchanged.
    """
    if p.is_zero():
        return ()
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)
