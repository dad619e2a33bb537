import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from krawtchouk_exact import orthogonality
from krawtchouk_exact.krawtchouk import krawtchouk, k_definition
from krawtchouk_exact.orthogonality import (
    WeightSequence,
    check_gram,
    check_low_degree_orthogonality,
    expand_in_krawtchouk_basis,
    gram_matrix,
    inner_product,
    random_polynomial,
)
from krawtchouk_exact.poly import UniPoly


def test_weights():
    for n in range(10):
        for s in (2, 3, 5):
            w = WeightSequence.for_params(n, s)
            assert all(x > 0 for x in w.weights)
            assert sum(w.weights) == s ** n


def test_inner_product_examples():
    w22 = WeightSequence.for_params(2, 2)
    assert inner_product(krawtchouk(2, 2, 0), krawtchouk(2, 2, 0), w22) == 4
    assert inner_product(krawtchouk(2, 2, 1), krawtchouk(2, 2, 1), w22) == 8
    w13 = WeightSequence.for_params(1, 3)
    assert inner_product(krawtchouk(1, 3, 0), krawtchouk(1, 3, 1), w13) == 0
    w42 = WeightSequence.for_params(4, 2)
    assert inner_product(krawtchouk(4, 2, 2), UniPoly.x(), w42) == 0


def test_inner_product_rejects_high_degree():
    w = WeightSequence.for_params(2, 2)
    with pytest.raises(ValueError):
        inner_product(UniPoly.monomial(3), UniPoly([1]), w)


def test_gram_examples():
    assert gram_matrix(1, 3) == [[3, 0], [0, 6]]
    assert gram_matrix(2, 2) == [[4, 0, 0], [0, 8, 0], [0, 0, 4]]
    for n in range(8):
        for s in (2, 3, 5):
            g = gram_matrix(n, s)
            assert g[0][0] == s ** n
            assert g[n][n] == s ** n * (s - 1) ** n


@pytest.mark.parametrize("n", range(0, 13))
@pytest.mark.parametrize("s", [2, 3, 5])
def test_gram_sweep(n, s):
    assert check_gram(n, s).passed


def test_low_degree_examples():
    assert check_low_degree_orthogonality(10, 3, 5, seed=7, trials=50).passed
    for m in range(1, 6):
        w = WeightSequence.for_params(5, 3)
        assert inner_product(UniPoly([1]), krawtchouk(5, 3, m), w) == 0


def test_random_polynomials_are_deterministic():
    a = [random_polynomial(random.Random(11), 4) for _ in range(3)]
    b = [random_polynomial(random.Random(11), 4) for _ in range(3)]
    assert a == b
    rng = random.Random(3)
    for _ in range(50):
        p = random_polynomial(rng, 4)
        assert 0 <= p.degree <= 4


def test_low_degree_fault_is_caught(monkeypatch):
    def faulty(params):
        return k_definition(params) + (1 if params.m == 3 else 0)
    monkeypatch.setattr(orthogonality, "k_definition", faulty)
    report = check_low_degree_orthogonality(6, 2, 3)
    assert not report.passed
    assert report.witness["kind"] == "monomial" and report.witness["d"] == 0


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=40)
@given(st.integers(1, 6), st.sampled_from([2, 3, 5]), st.data())
def test_bilinear_symmetric_positive(n, s, data):
    w = WeightSequence.for_params(n, s)
    poly = st.lists(coeff, max_size=n + 1).map(UniPoly)
    a, b, c = data.draw(poly), data.draw(poly), data.draw(poly)
    lam = data.draw(coeff)
    assert inner_product(a, b, w) == inner_product(b, a, w)
    assert inner_product(a * lam + b, c, w) == lam * inner_product(a, c, w) + inner_product(b, c, w)
    if not a.is_zero():
        assert inner_product(a, a, w) > 0


@settings(max_examples=40)
@given(st.integers(0, 7), st.sampled_from([2, 3, 5]), st.data())
def test_basis_expansion_round_trip(n, s, data):
    a = data.draw(st.lists(coeff, max_size=n + 1).map(UniPoly))
    lam = expand_in_krawtchouk_basis(a, n, s)
    rebuilt = sum((l * krawtchouk(n, s, k) for k, l in enumerate(lam)), UniPoly())
    assert rebuilt == a
