from fractions import Fraction
from math import comb, factorial

import pytest

from krawtchouk_exact.krawtchouk import (
    KrawtchoukParams,
    k_definition,
    k_from_generating_function,
    k_three_term,
    k_value_gf,
    k_value_table,
    krawtchouk,
    leading_coefficient,
    three_term_coefficients,
)
from krawtchouk_exact.poly import UniPoly, poly_eval

SWEEP = [(n, s, m) for n in range(0, 11) for s in (2, 3, 5) for m in range(n + 1)]

# frozen from an independent computer-algebra expansion of the defining sum
FROZEN = {
    (3, 5, 3): ["80", "-108", "81/2", "-9/2"],
    (4, 8, 2): ["70", "-352/3", "172/3", "-32/3", "2/3"],
    (2, 6, 2): ["15", "-12", "2"],
    (3, 7, 5): ["2240", "-4475/3", "625/2", "-125/6"],
}


def X():
    return UniPoly.x()


@pytest.mark.parametrize("bad", [(4, 1, 2), (4, 2, 5), (4, 2, -1)])
def test_params_validation(bad):
    with pytest.raises(ValueError):
        KrawtchoukParams(*bad)


def test_k0_and_k1():
    for n in range(6):
        for s in (2, 3, 7):
            assert k_definition(KrawtchoukParams(n, s, 0)) == UniPoly([1])
            if n:
                assert k_definition(KrawtchoukParams(n, s, 1)) == UniPoly([n * (s - 1), -s])


def test_k2_closed_forms():
    for n in range(2, 10):
        assert krawtchouk(n, 2, 2) == ((n - 2 * X()) ** 2 - n) / 2
        for s in (2, 3, 4, 5):
            expected = UniPoly([(s - 1) ** 2 * n * (n - 1), -s * (2 * n * s - 2 * n - s + 2), s * s]) / 2
            assert krawtchouk(n, s, 2) == expected
            assert k_three_term(KrawtchoukParams(n, s, 2)) == expected


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_coefficients(key):
    m, n, s = key
    for method in ("definition", "gf", "recurrence"):
        got = krawtchouk(n, s, m, method)
        assert got == UniPoly(Fraction(c) for c in FROZEN[key])


def test_value_gf_examples():
    for n in range(1, 8):
        for s in (2, 3, 5):
            for m in range(n + 1):
                p = KrawtchoukParams(n, s, m)
                assert k_value_gf(p, 0) == comb(n, m) * (s - 1) ** m
                assert k_value_gf(p, n) == (-1) ** m * comb(n, m)
            for i in range(n + 1):
                assert k_value_gf(KrawtchoukParams(n, s, 1), i) == (n - i) * (s - 1) - i
    assert k_value_gf(KrawtchoukParams(4, 2, 2), 1) == 0


def test_value_gf_range():
    with pytest.raises(ValueError):
        k_value_gf(KrawtchoukParams(4, 2, 2), 5)


def test_gf_constructor_examples():
    assert k_from_generating_function(KrawtchoukParams(4, 2, 2)) == UniPoly([6, -8, 2])
    assert k_from_generating_function(KrawtchoukParams(5, 3, 0)) == UniPoly([1])
    assert k_from_generating_function(KrawtchoukParams(5, 3, 1)) == UniPoly([10, -3])


def test_three_term_example():
    c = three_term_coefficients(4, 2, 1)
    assert (c.a, c.b) == (4, 4)
    assert k_three_term(KrawtchoukParams(4, 2, 2)) == UniPoly([6, -8, 2])


@pytest.mark.parametrize("n,s,m", SWEEP)
def test_constructors_agree(n, s, m):
    p = KrawtchoukParams(n, s, m)
    k = k_definition(p)
    assert k_from_generating_function(p) == k
    assert k_three_term(p) == k
    assert k.degree == m
    assert k.leading_coefficient == leading_coefficient(p)
    assert poly_eval(k, 0) == comb(n, m) * (s - 1) ** m
    assert poly_eval(k, n) == (-1) ** m * comb(n, m)


def test_leading_coefficient_examples():
    assert leading_coefficient(KrawtchoukParams(3, 5, 0)) == 1
    assert leading_coefficient(KrawtchoukParams(3, 5, 1)) == -5
    assert leading_coefficient(KrawtchoukParams(3, 2, 2)) == 2
    assert leading_coefficient(KrawtchoukParams(6, 3, 3)) == Fraction(-27, factorial(3))


def test_three_term_coefficients_positive():
    for n in range(2, 17):
        for s in (2, 3, 5):
            for m in range(1, n):
                c = three_term_coefficients(n, s, m)
                assert c.a > 0 and c.b > 0


def test_value_table_examples():
    t = k_value_table(4, 2, 2)
    assert t == [[1] * 5, [4, 2, 0, -2, -4], [6, 0, -2, 0, 6]]
    for n in range(2, 8):
        for s in (2, 3, 5):
            t = k_value_table(n, s, 2)
            assert t[2][1] == t[2][0] - t[1][0] - (s - 1) * t[1][1]


@pytest.mark.parametrize("n,s", [(n, s) for n in range(0, 13) for s in (2, 3, 5)])
def test_value_table_matches_evaluation(n, s):
    t = k_value_table(n, s, n)
    for m, row in enumerate(t):
        k = k_definition(KrawtchoukParams(n, s, m))
        assert row == [poly_eval(k, i) for i in range(n + 1)]


def test_unknown_method():
    with pytest.raises(ValueError):
        krawtchouk(3, 2, 1, "bogus")
