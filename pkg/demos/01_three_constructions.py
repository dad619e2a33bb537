"""Build one Krawtchouk polynomial three independent ways and compare.

Run with ``python3 demos/01_three_constructions.py``.
"""
from krawtchouk_exact import KrawtchoukParams, k_definition, k_from_generating_function, k_three_term, k_value_table

params = KrawtchoukParams(n=5, s=3, m=3)

# each constructor works from a different formula, all in exact rationals
by_sum = k_definition(params)
by_gf = k_from_generating_function(params)
by_recurrence = k_three_term(params)

print(f"K_{{3,5,3}}(X) = {by_sum}")
print("generating function agrees:", by_gf == by_sum)
print("three-term recurrence agrees:", by_recurrence == by_sum)

# the value table K_m(i) for i = 0..n, one row per degree m
print("\nvalue table, n=5, s=3")
for m, row in enumerate(k_value_table(5, 3, 5)):
    print(f"m={m}:", " ".join(f"{str(v):>5}" for v in row))
