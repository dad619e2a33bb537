"""Sturm-certified root intervals, interlacing, and the s = 2 mirror symmetry."""
from fractions import Fraction

from krawtchouk_exact import KrawtchoukParams, check_interlacing, check_root_symmetry_s2, isolate_roots
from krawtchouk_exact.roots import decimal_string

width = Fraction(1, 2 ** 40)
for m in (3, 4):
    print(f"roots of K_{{{m},8,3}}:")
    for iv in isolate_roots(KrawtchoukParams(8, 3, m), width):
        tag = "exact" if iv.exact else "bracket"
        print(f"  {tag:8} ~ {decimal_string(iv.midpoint(), 12)}")

print("\ninterlacing K_3 / K_4 certified:", check_interlacing(8, 3, 3, width).passed)

# With s = 2 the roots are symmetric about n/2, and odd degree forces n/2 itself.
print("\nK_{5,10,2} roots:", [str(iv) for iv in isolate_roots(KrawtchoukParams(10, 2, 5))])
print("symmetric about 5:", check_root_symmetry_s2(10, 5).passed)
