"""Run the identity checks over a small grid and show what a failure looks like."""
from krawtchouk_exact import (
    UniPoly,
    check_bivariate_kernel,
    check_poly_recurrence,
    check_summation,
    check_symmetry_s2,
    identities,
)

for n in range(2, 7):
    reports = [check_poly_recurrence(n, 3), check_bivariate_kernel(n, 3), check_symmetry_s2(n, 2)]
    reports += [check_summation(n, 3, m) for m in range(1, n)]
    print(f"n={n}: {sum(r.passed for r in reports)}/{len(reports)} checks passed")

# Swap in a broken constructor to see the witness a failed check reports.
original = identities.k_definition


def broken(params):
    k = original(params)
    return k + UniPoly.x() if params.m == 3 else k


identities.k_definition = broken
try:
    report = check_poly_recurrence(6, 3)
finally:
    identities.k_definition = original
print("\nwith a corrupted K_3:")
print(report.to_dict())
