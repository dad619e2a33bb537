"""Certified real-root isolation with Sturm sequences.

Isolation works on any squarefree polynomial over an open rational
interval with nonzero endpoint values; :func:`isolate_roots` applies it to
K_{m,n,s} on (0, n).  Every returned :class:`IsolatingInterval` is either an
exact rational root (``lo == hi``) or a bracket with a sign change at its
endpoints and Sturm count 1.

Sign variations only depend on signs, so the fast path works on a
fraction-free chain of integer polynomials (pseudo-remainders with content
removed), each a positive multiple of the matching canonical Sturm member.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .krawtchouk import KrawtchoukParams, k_definition
from .poly import UniPoly, integer_primitive, poly_divmod, poly_eval, poly_gcd
from .report import VerificationReport, make_report, rational_str

DEFAULT_WIDTH = Fraction(1, 2 ** 32)
MAX_BISECTIONS = 256
NUDGE_RETRIES = 64

IntPoly = tuple  # integer coefficients, constant term first


# --------------------------------------------------------------------------
# integer polynomial helpers


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _scaled_value(c: IntPoly, x: Fraction) -> int:
    """q^d * c(p/q) for x = p/q; same sign as c(x) since q > 0."""
    a, b = x.numerator, x.denominator
    if not c:
        return 0
    acc = c[-1]
    bp = 1
    for k in range(len(c) - 2, -1, -1):
        bp *= b
        acc = acc * a + c[k] * bp
    return acc


def _sign_at(c: IntPoly, x: Fraction) -> int:
    return _sign(_scaled_value(c, x))


def _content_free(c: list[int]) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    g = 0
    for v in c:
        g = math.gcd(g, v)
    return tuple(v // g for v in c) if g > 1 else tuple(c)


def _pseudo_remainder(f: IntPoly, g: IntPoly) -> list[int]:
    """prem(f, g): lc(g)^(deg f - deg g + 1) f reduced modulo g, over the integers."""
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    steps = len(f) - len(g) + 1
    for _ in range(steps):
        if len(r) - 1 < dg:
            r = [v * lc for v in r]
            continue
        top = r[-1]
        shift = len(r) - 1 - dg
        r = [v * lc for v in r]
        for j, y in enumerate(g):
            r[shift + j] -= top * y
        r.pop()
    return r


def _fraction_free_chain(p: UniPoly) -> tuple[IntPoly, ...]:
    f0 = integer_primitive(p)
    f1 = integer_primitive(p.derivative())
    chain = [f0]
    if f1:
        chain.append(f1)
    while len(chain) >= 2 and len(chain[-1]) > 1:
        f, g = chain[-2], chain[-1]
        r = _pseudo_remainder(f, g)
        delta = len(f) - len(g) + 1
        # prem = lc^delta * rem; keep the negated remainder up to a positive factor
        factor_sign = _sign(g[-1]) ** delta
        r = _content_free([-factor_sign * v for v in r])
        if not r:
            break
        chain.append(r)
    return tuple(chain)


def _variations(chain: Sequence[IntPoly], x: Fraction) -> int:
    count = 0
    last = 0
    for c in chain:
        s = _sign_at(c, x)
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


# --------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class SturmSequence:
    """Sturm chain p, p', -rem(p, p'), ...; ``chain`` holds the canonical rational members."""

    chain: tuple[UniPoly, ...]
    _ints: tuple = field(default=(), repr=False, compare=False)

    @property
    def polynomial(self) -> UniPoly:
        return self.chain[0]

    @property
    def integer_chain(self) -> tuple[IntPoly, ...]:
        return self._ints or tuple(integer_primitive(c) for c in self.chain)

    def is_squarefree(self) -> bool:
        return self.chain[-1].degree == 0

    def variations(self, x) -> int:
        return _variations(self.integer_chain, Fraction(x))


def sturm_sequence(p: UniPoly, fraction_free: bool = False) -> SturmSequence:
    """Canonical Sturm chain of p over the rationals.

    With ``fraction_free`` the chain members are the primitive integer
    versions produced by pseudo-division; they differ from the canonical
    members by positive factors, so sign variations agree.
    """
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial is undefined")
    if fraction_free:
        ints = _fraction_free_chain(p)
        return SturmSequence(tuple(UniPoly(c) for c in ints), ints)
    chain = [p]
    d = p.derivative()
    if not d.is_zero():
        chain.append(d)
    while len(chain) >= 2 and chain[-1].degree > 0:
        rem = -poly_divmod(chain[-2], chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(rem)
    return SturmSequence(tuple(chain))


def count_roots(seq: SturmSequence, lo, hi) -> int:
    """Number of distinct real roots in (lo, hi].

    An endpoint may itself be a root when the polynomial is squarefree
    (the variation count at a simple root equals the count just right of
    it).  For a polynomial with repeated roots an endpoint root is rejected.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    p = seq.integer_chain[0]
    if not seq.is_squarefree() and (_sign_at(p, lo) == 0 or _sign_at(p, hi) == 0):
        raise ValueError("endpoint is a root of a polynomial with repeated roots")
    return seq.variations(lo) - seq.variations(hi)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.exact and self.lo != self.hi:
            raise ValueError("an exact root interval must have lo == hi")
        if not self.exact and not self.lo < self.hi:
            raise ValueError("a bracketing interval must have lo < hi")

    @classmethod
    def point(cls, x) -> "IsolatingInterval":
        return cls(x, x, True)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def mirrored(self, n) -> "IsolatingInterval":
        """Image under x -> n - x."""
        return IsolatingInterval(n - self.hi, n - self.lo, self.exact)

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_dict(self, decimals: Optional[int] = None) -> dict:
        out = {"lo": rational_str(self.lo), "hi": rational_str(self.hi), "exact": self.exact}
        if decimals is not None:
            out["decimal"] = decimal_string(self.midpoint(), decimals)
        return out

    def __str__(self) -> str:
        if self.exact:
            return rational_str(self.lo)
        return f"({rational_str(self.lo)}, {rational_str(self.hi)})"


def decimal_string(x: Fraction, digits: int) -> str:
    """Round-half-even decimal rendering, for display only."""
    scaled = round(x * 10 ** digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


# --------------------------------------------------------------------------
# isolation


def simplest_rational(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in [lo, hi]."""
    if lo > hi:
        lo, hi = hi, lo
    fl = math.floor(lo)
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    return fl + 1 / simplest_rational(1 / (hi - fl), 1 / (lo - fl))


class _Isolator:
    def __init__(self, p: UniPoly, width: Fraction, max_bisections: int):
        self.seq = sturm_sequence(p, fraction_free=True)
        if not self.seq.is_squarefree():
            raise ValueError("root isolation needs a squarefree polynomial")
        self.f = self.seq.integer_chain[0]
        self.width = Fraction(width)
        if self.width <= 0:
            raise ValueError("width must be positive")
        self.max_bisections = max_bisections
        # distinct rationals with denominator <= |lc| are >= 1/lc^2 apart
        self.separation = Fraction(1, self.f[-1] ** 2)
        self.out: list[IsolatingInterval] = []

    def sign(self, x: Fraction) -> int:
        return _sign_at(self.f, x)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        return self.seq.variations(lo) - self.seq.variations(hi)

    def run(self, lo: Fraction, hi: Fraction) -> list[IsolatingInterval]:
        if self.sign(lo) == 0 or self.sign(hi) == 0:
            raise ValueError("search interval endpoints must not be roots")
        self._split(lo, hi, self.count(lo, hi), 0, lo, hi)
        return self.out

    def _split(self, lo, hi, cnt, depth, outer_lo, outer_hi):
        if cnt == 0:
            return
        if cnt == 1 and hi - lo <= self.width:
            self._finish(lo, hi, outer_lo, outer_hi)
            return
        if depth >= self.max_bisections:
            raise ArithmeticError(f"bisection budget exhausted on ({lo}, {hi})")
        mid = (lo + hi) / 2
        if self.sign(mid) != 0:
            left = self.count(lo, mid)
            self._split(lo, mid, left, depth + 1, outer_lo, outer_hi)
            self._split(mid, hi, cnt - left, depth + 1, outer_lo, outer_hi)
            return
        # midpoint is an exact root: step off it on both sides
        delta = min(self.width, hi - lo) / 4
        for _ in range(NUDGE_RETRIES):
            a, b = mid - delta, mid + delta
            if self.sign(a) and self.sign(b) and self.count(a, b) == 1:
                break
            delta /= 2
        else:
            raise ArithmeticError(f"could not step off exact root {mid}")
        left = self.count(lo, a)
        self._split(lo, a, left, depth + 1, outer_lo, outer_hi)
        self.out.append(IsolatingInterval.point(mid))
        self._split(b, hi, cnt - left - 1, depth + 1, outer_lo, outer_hi)

    def _finish(self, lo, hi, outer_lo, outer_hi):
        """Single root in (lo, hi): keep the bracket strictly inside the search range, then test for a rational root."""
        s_lo = self.sign(lo)
        steps = 0

        def bisect(a, b):
            nonlocal steps
            if steps >= self.max_bisections:
                raise ArithmeticError(f"refinement budget exhausted on ({lo}, {hi})")
            steps += 1
            mid = (a + b) / 2
            sm = self.sign(mid)
            if sm == 0:
                return mid, mid
            return (mid, b) if sm == s_lo else (a, mid)

        while lo == outer_lo or hi == outer_hi:
            lo, hi = bisect(lo, hi)
            if lo == hi:
                self.out.append(IsolatingInterval.point(lo))
                return
        a, b = lo, hi
        while b - a >= self.separation:
            a, b = bisect(a, b)
            if a == b:
                self.out.append(IsolatingInterval.point(a))
                return
        r = simplest_rational(a, b)
        if self.sign(r) == 0:
            self.out.append(IsolatingInterval.point(r))
        else:
            self.out.append(IsolatingInterval(lo, hi))


def isolate_real_roots(p: UniPoly, lo, hi, width=DEFAULT_WIDTH, max_bisections: int = MAX_BISECTIONS) -> list[IsolatingInterval]:
    """Sorted isolating intervals for all roots of squarefree p in the open interval (lo, hi)."""
    return _Isolator(p, width, max_bisections).run(Fraction(lo), Fraction(hi))


@lru_cache(maxsize=4096)
def _isolate_cached(n: int, s: int, m: int, width: Fraction) -> tuple[IsolatingInterval, ...]:
    k = k_definition(KrawtchoukParams(n, s, m))
    out = isolate_real_roots(k, 0, n, width)
    if len(out) != m:
        raise ArithmeticError(f"found {len(out)} roots of a degree-{m} Krawtchouk polynomial in (0, n)")
    return tuple(out)


def isolate_roots(params: KrawtchoukParams, width=DEFAULT_WIDTH) -> list[IsolatingInterval]:
    """Isolating intervals for the m roots of K_{m,n,s}, all inside (0, n), ascending."""
    if params.m < 1:
        raise ValueError("K_0 is constant and has no roots")
    return list(_isolate_cached(params.n, params.s, params.m, Fraction(width)))


def refine(f: IntPoly, iv: IsolatingInterval) -> IsolatingInterval:
    """One sign-based bisection step of a bracketing interval."""
    if iv.exact:
        return iv
    mid = iv.midpoint()
    sm = _sign_at(f, mid)
    if sm == 0:
        return IsolatingInterval.point(mid)
    if sm == _sign_at(f, iv.lo):
        return IsolatingInterval(mid, iv.hi)
    return IsolatingInterval(iv.lo, mid)


def certify_interval(seq: SturmSequence, iv: IsolatingInterval) -> bool:
    """Re-check an interval's certificate from its stored fields."""
    f = seq.integer_chain[0]
    if iv.exact:
        return _sign_at(f, iv.lo) == 0
    s_lo, s_hi = _sign_at(f, iv.lo), _sign_at(f, iv.hi)
    return s_lo * s_hi < 0 and count_roots(seq, iv.lo, iv.hi) == 1


def cauchy_bound(p: UniPoly) -> Fraction:
    """1 + max |c_k / c_d|; every real root lies strictly inside (-B, B)."""
    lc = p.leading_coefficient
    return 1 + max((abs(c / lc) for c in p.coeffs[:-1]), default=Fraction(0))


# --------------------------------------------------------------------------
# certificates


def _K(n: int, s: int, m: int) -> UniPoly:
    return k_definition(KrawtchoukParams(n, s, m))


def check_root_isolation(n: int, s: int, m: int, width=DEFAULT_WIDTH) -> VerificationReport:
    """Exactly m simple roots in (0, n), none outside, each interval certified."""
    width = Fraction(width)
    point = {"n": n, "s": s, "m": m, "width": width}
    k = _K(n, s, m)
    seq = sturm_sequence(k, fraction_free=True)
    bound = max(cauchy_bound(k), n + 1)
    counts = {
        "below": count_roots(seq, -bound, 0),
        "inside": count_roots(seq, 0, n) - (1 if poly_eval(k, n) == 0 else 0),
        "above": count_roots(seq, n, bound),
    }
    if counts != {"below": 0, "inside": m, "above": 0}:
        return make_report("roots", point, {"reason": "root count", **counts})
    if poly_gcd(k, k.derivative()).degree != 0:
        return make_report("roots", point, {"reason": "repeated root"})
    intervals = isolate_roots(KrawtchoukParams(n, s, m), width)
    for idx, iv in enumerate(intervals):
        if not (0 < iv.lo and iv.hi < n and iv.width <= width and certify_interval(seq, iv)):
            return make_report("roots", point, {"reason": "interval certificate", "index": idx, "interval": iv.to_dict()})
        if idx and not intervals[idx - 1].hi < iv.lo:
            return make_report("roots", point, {"reason": "overlap", "index": idx, "interval": iv.to_dict()})
    return make_report("roots", point, None)


def check_interlacing(n: int, s: int, m: int, width=DEFAULT_WIDTH, max_bisections: int = MAX_BISECTIONS) -> VerificationReport:
    """0 < y_1 < x_1 < y_2 < ... < x_m < y_{m+1} < n for roots x of K_m and y of K_{m+1}."""
    if not 1 <= m <= n - 1:
        raise ValueError(f"interlacing needs 1 <= m <= n-1, got m={m}, n={n}")
    width = Fraction(width)
    point = {"n": n, "s": s, "m": m, "width": width}
    polys = {"x": integer_primitive(_K(n, s, m)), "y": integer_primitive(_K(n, s, m + 1))}
    xs = isolate_roots(KrawtchoukParams(n, s, m), width)
    ys = isolate_roots(KrawtchoukParams(n, s, m + 1), width)
    # expected order y1, x1, y2, ..., x_m, y_{m+1}
    seq: list[list] = []
    for i in range(m):
        seq.append(["y", ys[i], 0])
        seq.append(["x", xs[i], 0])
    seq.append(["y", ys[m], 0])
    if not (0 < seq[0][1].lo and seq[-1][1].hi < n):
        return make_report("interlacing", point, {"reason": "root outside (0, n)"})
    changed = True
    while changed:
        changed = False
        for j in range(len(seq) - 1):
            left, right = seq[j], seq[j + 1]
            a, b = left[1], right[1]
            if a.hi < b.lo:
                continue
            if a.lo > b.hi or (a.exact and b.exact):
                return make_report(
                    "interlacing", point,
                    {"reason": "order", "position": j, "left": [left[0], a.to_dict()], "right": [right[0], b.to_dict()]},
                )
            target = left if (b.exact or (not a.exact and a.width >= b.width)) else right
            if target[2] >= max_bisections:
                return make_report("interlacing", point, {"reason": "refinement budget exhausted", "position": j})
            target[1] = refine(polys[target[0]], target[1])
            target[2] += 1
            changed = True
    return make_report("interlacing", point, None)


def check_root_symmetry_s2(n: int, m: int, width=DEFAULT_WIDTH) -> VerificationReport:
    """Roots of K_{m,n,2} are symmetric about n/2; for odd m the middle root is n/2."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    width = Fraction(width)
    point = {"n": n, "s": 2, "m": m, "width": width}
    k = _K(n, 2, m)
    seq = sturm_sequence(k, fraction_free=True)
    intervals = isolate_roots(KrawtchoukParams(n, 2, m), width)
    mirrored = [iv.mirrored(n) for iv in reversed(intervals)]
    for idx, (iv, mv) in enumerate(zip(intervals, mirrored)):
        if iv == mv:
            continue
        # fall back to a Sturm certificate that the mirrored bracket holds this root
        lo, hi = max(iv.lo, mv.lo), min(iv.hi, mv.hi)
        ok = (
            lo <= hi
            and not iv.exact
            and not mv.exact
            and lo < hi
            and poly_eval(k, lo) * poly_eval(k, hi) < 0
            and count_roots(seq, mv.lo, mv.hi) == 1
        )
        if not ok:
            return make_report("root-symmetry", point, {"reason": "mirror mismatch", "index": idx, "interval": iv.to_dict(), "mirror": mv.to_dict()})
    if m % 2 == 1:
        middle = intervals[m // 2]
        half = Fraction(n, 2)
        if n % 2 == 0 and not (middle.exact and middle.lo == half):
            return make_report("root-symmetry", point, {"reason": "n/2 not reported as exact root", "interval": middle.to_dict()})
        if not middle.contains(half):
            return make_report("root-symmetry", point, {"reason": "middle interval misses n/2", "interval": middle.to_dict()})
    return make_report("root-symmetry", point, None)
