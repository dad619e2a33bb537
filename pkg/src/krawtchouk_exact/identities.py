"""Exact checks of the Krawtchouk identities.

Every check compares full coefficient sequences (or exact values), so a
passing report is a proof of the identity at that parameter point.  A
failing report carries the lexicographically first failing sub-point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .krawtchouk import KrawtchoukParams, definition_sum, k_definition
from .poly import UniPoly, binomial, falling_basis, poly_compose_affine, poly_eval
from .report import VerificationReport, make_report


class BivariatePoly:
    """Dense polynomial in X, Y; ``coeffs[k][l]`` is the coefficient of X^k Y^l."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        rows = [[Fraction(c) for c in row] for row in coeffs]
        width = max((len(r) for r in rows), default=0)
        self.coeffs = tuple(tuple(r + [Fraction(0)] * (width - len(r))) for r in rows)

    @classmethod
    def outer(cls, p: UniPoly, q: UniPoly, c=1) -> "BivariatePoly":
        """c * p(X) * q(Y)."""
        return cls([[c * a * b for b in q.coeffs] for a in p.coeffs])

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.coeffs), len(self.coeffs[0]) if self.coeffs else 0

    def padded(self, shape: tuple[int, int]) -> "BivariatePoly":
        rows, cols = shape
        z = Fraction(0)
        out = [list(r) + [z] * (cols - len(r)) for r in self.coeffs]
        out += [[z] * cols for _ in range(rows - len(out))]
        return BivariatePoly(out)

    def trimmed(self) -> "BivariatePoly":
        rows = [list(r) for r in self.coeffs]
        while rows and not any(rows[-1]):
            rows.pop()
        width = max((max((j + 1 for j, c in enumerate(r) if c), default=0) for r in rows), default=0)
        return BivariatePoly([r[:width] for r in rows])

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        shape = (max(self.shape[0], other.shape[0]), max(self.shape[1], other.shape[1]))
        a, b = self.padded(shape), other.padded(shape)
        return BivariatePoly([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.coeffs, b.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BivariatePoly([[other * c for c in r] for r in self.coeffs])
        (r1, c1), (r2, c2) = self.shape, other.shape
        if not r1 or not r2 or not c1 or not c2:
            return BivariatePoly([])
        out = [[Fraction(0)] * (c1 + c2 - 1) for _ in range(r1 + r2 - 1)]
        for i, row in enumerate(self.coeffs):
            for j, a in enumerate(row):
                if not a:
                    continue
                for k, orow in enumerate(other.coeffs):
                    for l, b in enumerate(orow):
                        if b:
                            out[i + k][j + l] += a * b
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivariatePoly":
        result = BivariatePoly([[1]])
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.trimmed().coeffs == other.trimmed().coeffs

    def coefficient(self, k: int, l: int) -> Fraction:
        if k < len(self.coeffs) and l < len(self.coeffs[k]):
            return self.coeffs[k][l]
        return Fraction(0)


def _K(n: int, s: int, m: int) -> UniPoly:
    return k_definition(KrawtchoukParams(n, s, m))


def check_pascal_basis(j_max: int) -> VerificationReport:
    """P_j(X) + P_{j+1}(X) == P_{j+1}(X+1) for 0 <= j <= j_max."""
    witness = None
    for j in range(j_max + 1):
        lhs = falling_basis(j) + falling_basis(j + 1)
        rhs = poly_compose_affine(falling_basis(j + 1), 1, 1)
        if lhs != rhs:
            witness = {"j": j, "lhs": lhs, "rhs": rhs}
            break
    return make_report("pascal", {"j_max": j_max}, witness)


def check_value_recurrence(n: int, s: int) -> VerificationReport:
    """K_m(i) == K_m(i-1) - K_{m-1}(i-1) - (s-1) K_{m-1}(i) for 1 <= m, i <= n."""
    witness = None
    values = [[poly_eval(_K(n, s, m), i) for i in range(n + 1)] for m in range(n + 1)]
    for m in range(1, n + 1):
        for i in range(1, n + 1):
            lhs = values[m][i]
            rhs = values[m][i - 1] - values[m - 1][i - 1] - (s - 1) * values[m - 1][i]
            if lhs != rhs:
                witness = {"m": m, "i": i, "lhs": lhs, "rhs": rhs}
                break
        if witness:
            break
    return make_report("value-rec", {"n": n, "s": s}, witness)


def check_poly_recurrence(n: int, s: int) -> VerificationReport:
    """K_m(X) == K_m(X-1) - K_{m-1}(X-1) - (s-1) K_{m-1}(X) as polynomials."""
    witness = None
    for m in range(1, n + 1):
        km, kprev = _K(n, s, m), _K(n, s, m - 1)
        rhs = poly_compose_affine(km, 1, -1) - poly_compose_affine(kprev, 1, -1) - (s - 1) * kprev
        if km != rhs:
            witness = {"m": m, "lhs": km, "rhs": rhs}
            break
    return make_report("poly-rec", {"n": n, "s": s}, witness)


def check_summation(n: int, s: int, m: int, extended: bool = False) -> VerificationReport:
    """Sum_{k<=m} K_{k,n,s}(X) == K_{m,n-1,s}(X-1).

    The top index m == n needs K_{n,n-1,s}, which lies outside 0 <= m <= n;
    it is only evaluated (through the raw defining sum) with ``extended``.
    """
    if n < 2 or m < 1 or m > n or (m == n and not extended):
        raise ValueError(f"summation check needs n >= 2 and 1 <= m <= n-1 (m = n with extended), got n={n}, m={m}")
    lhs = UniPoly()
    for k in range(m + 1):
        lhs = lhs + _K(n, s, k)
    shifted = definition_sum(n - 1, s, m) if m == n else _K(n - 1, s, m)
    rhs = poly_compose_affine(shifted, 1, -1)
    witness = None if lhs == rhs else {"m": m, "lhs": lhs, "rhs": rhs}
    return make_report("summation", {"n": n, "s": s, "m": m}, witness)


def check_symmetry_s2(n: int, m: int) -> VerificationReport:
    """K_{m,n,2}(n - X) == (-1)^m K_{m,n,2}(X)."""
    k = _K(n, 2, m)
    lhs = poly_compose_affine(k, -1, n)
    rhs = k * (-1) ** m
    witness = None if lhs == rhs else {"m": m, "lhs": lhs, "rhs": rhs}
    return make_report("symmetry", {"n": n, "s": 2, "m": m}, witness)


def kernel_sum(n: int, s: int) -> BivariatePoly:
    """Sum_i C(n,i)(s-1)^i (Sum_k K_k(i) X^k)(Sum_l K_l(i) Y^l)."""
    family = [_K(n, s, k) for k in range(n + 1)]
    total = BivariatePoly([])
    for i in range(n + 1):
        g = UniPoly(poly_eval(kk, i) for kk in family)
        total = total + BivariatePoly.outer(g, g, binomial(n, i) * (s - 1) ** i)
    return total


def check_bivariate_kernel(n: int, s: int) -> VerificationReport:
    """The kernel sum equals s^n (1 + (s-1) XY)^n, diagonal s^n C(n,k) (s-1)^k."""
    lhs = kernel_sum(n, s)
    rhs = BivariatePoly([[1], [0, s - 1]]) ** n * s ** n
    witness: Optional[dict] = None
    size = n + 1
    for k in range(size):
        for l in range(size):
            a, b = lhs.coefficient(k, l), rhs.coefficient(k, l)
            expected = Fraction(s ** n * binomial(n, k) * (s - 1) ** k if k == l else 0)
            if a != b or a != expected:
                witness = {"k": k, "l": l, "lhs": a, "rhs": b, "expected": expected}
                break
        if witness:
            break
    if witness is None and lhs != rhs:
        witness = {"k": None, "l": None, "lhs": "degree overflow", "rhs": None}
    return make_report("kernel", {"n": n, "s": s}, witness)
