"""Weighted inner product <A,B> = Sum_i C(n,i)(s-1)^i A(i) B(i) on polynomials of degree <= n."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .krawtchouk import KrawtchoukParams, k_definition
from .poly import UniPoly, binomial, poly_eval
from .report import VerificationReport, make_report


@dataclass(frozen=True)
class WeightSequence:
    n: int
    s: int
    weights: tuple[Fraction, ...]

    @classmethod
    def for_params(cls, n: int, s: int) -> "WeightSequence":
        if n < 0 or s < 2:
            raise ValueError(f"need n >= 0 and s >= 2, got n={n}, s={s}")
        return cls(n, s, tuple(Fraction(binomial(n, i) * (s - 1) ** i) for i in range(n + 1)))


def inner_product(a: UniPoly, b: UniPoly, w: WeightSequence) -> Fraction:
    for name, p in (("A", a), ("B", b)):
        if p.degree > w.n:
            raise ValueError(f"{name} has degree {p.degree} > n = {w.n}; the inner product lives on polynomials of degree <= n")
    return sum((wi * poly_eval(a, i) * poly_eval(b, i) for i, wi in enumerate(w.weights)), Fraction(0))


def gram_matrix(n: int, s: int) -> list[list[Fraction]]:
    w = WeightSequence.for_params(n, s)
    family = [k_definition(KrawtchoukParams(n, s, k)) for k in range(n + 1)]
    # tabulate values once; entry (k, l) = Sum_i w_i K_k(i) K_l(i)
    values = [[poly_eval(p, i) for i in range(n + 1)] for p in family]
    return [
        [sum((wi * vk[i] * vl[i] for i, wi in enumerate(w.weights)), Fraction(0)) for vl in values]
        for vk in values
    ]


def expected_norm(n: int, s: int, k: int) -> int:
    """<K_k, K_k> = s^n (s-1)^k C(n,k)."""
    return s ** n * (s - 1) ** k * binomial(n, k)


def check_gram(n: int, s: int) -> VerificationReport:
    g = gram_matrix(n, s)
    witness = None
    for k, row in enumerate(g):
        for l, v in enumerate(row):
            expected = Fraction(expected_norm(n, s, k) if k == l else 0)
            if v != expected:
                witness = {"k": k, "l": l, "value": v, "expected": expected}
                break
        if witness:
            break
    return make_report("gram", {"n": n, "s": s}, witness)


def random_polynomial(rng: random.Random, max_degree: int) -> UniPoly:
    """Degree uniform in [0, max_degree]; coefficients p/q with p in [-9, 9], q in [1, 9].

    The leading coefficient is drawn nonzero so the degree is exact.
    """
    d = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-9, 9)
    coeffs.append(Fraction(lead, rng.randint(1, 9)))
    return UniPoly(coeffs)


def check_low_degree_orthogonality(n: int, s: int, m: int, seed: int = 0, trials: int = 50) -> VerificationReport:
    """<K_m, A> == 0 for every monomial X^d (d < m) and ``trials`` random A of degree < m.

    Random polynomials come from :class:`random.Random` (Mersenne Twister)
    seeded with ``seed``.
    """
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    w = WeightSequence.for_params(n, s)
    km = k_definition(KrawtchoukParams(n, s, m))
    witness = None
    for d in range(m):
        v = inner_product(km, UniPoly.monomial(d), w)
        if v != 0:
            witness = {"kind": "monomial", "d": d, "value": v}
            break
    if witness is None:
        rng = random.Random(seed)
        for t in range(trials):
            a = random_polynomial(rng, m - 1)
            v = inner_product(km, a, w)
            if v != 0:
                witness = {"kind": "random", "trial": t, "A": a, "value": v}
                break
    return make_report("orthogonality", {"n": n, "s": s, "m": m, "seed": seed, "trials": trials}, witness)


def expand_in_krawtchouk_basis(a: UniPoly, n: int, s: int) -> list[Fraction]:
    """Coefficients lambda_k = <A, K_k> / <K_k, K_k> with A = Sum_k lambda_k K_k."""
    w = WeightSequence.for_params(n, s)
    return [
        inner_product(a, k_definition(KrawtchoukParams(n, s, k)), w) / expected_norm(n, s, k)
        for k in range(n + 1)
    ]
