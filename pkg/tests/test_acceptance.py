"""Exit criteria for the package, one test per criterion.

Every criterion is exact (no numeric tolerance) except the wall-clock
budgets.  Each test records a PASS/FAIL line that is printed in the
pytest terminal summary; ``python3 tests/test_acceptance.py`` prints the
same lines without pytest.
"""
import json
import subprocess
import sys
import time
from importlib import import_module
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial
from pathlib import Path

import pytest

from krawtchouk_exact import identities, poly, roots
from krawtchouk_exact.cli import main
from krawtchouk_exact.identities import (
    check_bivariate_kernel,
    check_pascal_basis,
    check_poly_recurrence,
    check_summation,
    check_symmetry_s2,
    check_value_recurrence,
)
from krawtchouk_exact.krawtchouk import (
    KrawtchoukParams,
    k_definition,
    k_from_generating_function,
    k_three_term,
    leading_coefficient,
)
from krawtchouk_exact.orthogonality import check_gram, check_low_degree_orthogonality, gram_matrix
from krawtchouk_exact.poly import UniPoly, poly_eval
from krawtchouk_exact.roots import (
    check_interlacing,
    check_root_isolation,
    check_root_symmetry_s2,
    isolate_roots,
)

RESULTS: dict[str, str] = {}
S_SET = (2, 3, 5)
WIDTH = Fraction(1, 2 ** 32)
CONSTRUCTOR_SWEEP = [(n, s, m) for n in range(17) for s in S_SET for m in range(n + 1)]
GOLDEN = Path(__file__).parent / "golden"
# the package re-exports a function named krawtchouk, which shadows the submodule attribute
kmod = import_module("krawtchouk_exact.krawtchouk")


def clear_caches():
    kmod._definition.cache_clear()
    kmod._three_term_family.cache_clear()
    poly.falling_basis.cache_clear()
    roots._isolate_cached.cache_clear()


@contextmanager
def criterion(name, budget=None):
    clear_caches()
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        if budget is not None:
            assert elapsed < budget, f"{name}: {elapsed:.1f}s exceeds the {budget}s budget"
    except BaseException:
        RESULTS[name] = f"FAIL {name}"
        raise
    RESULTS[name] = f"PASS {name} ({elapsed:.2f}s)"


def test_constructor_agreement():
    with criterion("constructor agreement, n<=16, s in {2,3,5}", budget=10):
        for n, s, m in CONSTRUCTOR_SWEEP:
            p = KrawtchoukParams(n, s, m)
            k = k_definition(p)
            assert k_from_generating_function(p) == k, (n, s, m)
            assert k_three_term(p) == k, (n, s, m)


def test_degree_and_leading_coefficient():
    with criterion("degree m and leading coefficient (-s)^m/m!"):
        for n, s, m in CONSTRUCTOR_SWEEP:
            p = KrawtchoukParams(n, s, m)
            for k in (k_definition(p), k_from_generating_function(p), k_three_term(p)):
                assert k.degree == m
                assert k.leading_coefficient == leading_coefficient(p) == Fraction((-s) ** m, factorial(m))


def test_endpoint_values():
    with criterion("endpoint values K(0), K(n)"):
        for n, s, m in CONSTRUCTOR_SWEEP:
            k = k_definition(KrawtchoukParams(n, s, m))
            assert poly_eval(k, 0) == comb(n, m) * (s - 1) ** m
            assert poly_eval(k, n) == (-1) ** m * comb(n, m)


def test_identity_suite():
    with criterion("identity suite (pascal, recurrences, summation, s=2 symmetry)", budget=30):
        assert check_pascal_basis(20).passed
        for n in range(1, 13):
            for s in S_SET:
                assert check_value_recurrence(n, s).passed, (n, s)
                assert check_poly_recurrence(n, s).passed, (n, s)
                for m in range(1, n):
                    assert check_summation(n, s, m).passed, (n, s, m)
        for n in range(15):
            for m in range(n + 1):
                assert check_symmetry_s2(n, m).passed, (n, m)


def test_orthogonality():
    with criterion("orthogonality: diagonal Gram matrix and low-degree corollary"):
        assert gram_matrix(1, 3) == [[3, 0], [0, 6]]
        assert gram_matrix(2, 2) == [[4, 0, 0], [0, 8, 0], [0, 0, 4]]
        for n in range(13):
            for s in S_SET:
                assert check_gram(n, s).passed, (n, s)
                for m in range(1, n + 1):
                    report = check_low_degree_orthogonality(n, s, m, seed=0, trials=50)
                    assert report.passed, (n, s, m)


def test_bivariate_kernel():
    with criterion("bivariate kernel s^n(1+(s-1)XY)^n, n<=8, s in {2,3}"):
        for n in range(9):
            for s in (2, 3):
                assert check_bivariate_kernel(n, s).passed, (n, s)


def test_roots():
    with criterion("roots: isolation, interlacing, symmetry, exact n/2", budget=60):
        for n in range(1, 13):
            for s in S_SET:
                for m in range(1, n + 1):
                    assert check_root_isolation(n, s, m, WIDTH).passed, (n, s, m)
                    ivs = isolate_roots(KrawtchoukParams(n, s, m), WIDTH)
                    assert len(ivs) == m
                    assert all(0 < iv.lo and iv.hi < n and iv.width <= WIDTH for iv in ivs)
                    if m < n:
                        assert check_interlacing(n, s, m, WIDTH).passed, (n, s, m)
                    if s == 2:
                        assert check_root_symmetry_s2(n, m, WIDTH).passed, (n, m)
                        if m % 2 == 1 and n % 2 == 0:
                            middle = ivs[m // 2]
                            assert middle.exact and middle.lo == Fraction(n, 2)
        ivs = isolate_roots(KrawtchoukParams(4, 2, 2), WIDTH)
        assert [(iv.lo, iv.exact) for iv in ivs] == [(1, True), (3, True)]


GOLDEN_CASES = {
    "coeffs_n4_s2_m2.json": ["coeffs", "--n", "4", "--s", "2", "--m", "2"],
    "table_n4_s2_mmax2.json": ["table", "--n", "4", "--s", "2", "--m-max", "2"],
    "roots_n6_s2_m3.json": ["roots", "--n", "6", "--s", "2", "--m", "3"],
    "gram_n2_s2.json": ["gram", "--n", "2", "--s", "2"],
    "verify_summation_n4_s2.json": ["verify", "--suite", "summation", "--n-max", "4", "--s-set", "2"],
}


def test_cli_contract(capsys, monkeypatch):
    with criterion("CLI golden JSON and exit codes", budget=5):
        for name, argv in GOLDEN_CASES.items():
            assert main(argv) == 0
            out = capsys.readouterr().out.replace("\r\n", "\n")
            assert out.encode() == (GOLDEN / name).read_text().replace("\r\n", "\n").encode(), name
        assert main(["coeffs", "--n", "2", "--s", "2", "--m", "3"]) == 2
        assert main(["verify", "--suite", "nope"]) == 2
        assert main(["verify", "--suite", "poly-rec", "--n-max", "5", "--s-set", "2"]) == 0
        capsys.readouterr()

        def faulty(params):
            k = k_definition(params)
            return k + UniPoly.x() if params.m == 2 else k

        monkeypatch.setattr(identities, "k_definition", faulty)
        assert main(["verify", "--suite", "poly-rec", "--n-max", "5", "--s-set", "2"]) == 1
        doc = json.loads(capsys.readouterr().out)
        first = next(r for r in doc["payload"]["reports"] if not r["passed"])
        assert first["parameters"] == {"n": 2, "s": 2} and first["witness"]["m"] == 2


def test_whole_suite_budget():
    with criterion("verify --suite all --n-max 12 --s-set 2,3,5 under 2 minutes", budget=120):
        proc = subprocess.run(
            [sys.executable, "-m", "krawtchouk_exact", "verify", "--suite", "all", "--n-max", "12", "--s-set", "2,3,5", "--format", "plain"],
            capture_output=True, text=True, check=False, timeout=300,
        )
        assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
        assert "FAIL" not in proc.stdout


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
