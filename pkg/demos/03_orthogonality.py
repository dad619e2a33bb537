"""Gram matrix of the family under the binomial weight, and a basis expansion."""
from fractions import Fraction

from krawtchouk_exact import UniPoly, check_low_degree_orthogonality, gram_matrix
from krawtchouk_exact.orthogonality import expand_in_krawtchouk_basis

n, s = 4, 3
for row in gram_matrix(n, s):
    print(" ".join(f"{str(v):>6}" for v in row))

report = check_low_degree_orthogonality(n, s, m=3, seed=7, trials=50)
print("\nK_3 is orthogonal to everything of degree < 3:", report.passed)

# Because the Gram matrix is diagonal, coefficients in the Krawtchouk basis
# come straight from inner products.
a = UniPoly([1, Fraction(-1, 2), 0, 2])
print(f"\n{a} in the K basis:", [str(c) for c in expand_in_krawtchouk_basis(a, n, s)])
