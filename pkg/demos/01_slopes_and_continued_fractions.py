#!/usr/bin/env python3
"""Slopes and their canonical continued fractions.

Every simple closed curve on the framed 4-punctured projection sphere is
named by a reduced rational p/q (or 1/0).  Adding an integer to the slope
is an isotopy of the associated link, so each interesting slope class has
a unique representative with 0 < p < q, and that representative has a
unique positive continued fraction

    p/q = 1 / (a1 + 1 / (a2 + ... + 1 / ak)),   a_i >= 1, a_k >= 2.

The length k of this expansion is the single combinatorial quantity that
drives every volume and spectral bound in the package.
"""

from coilbounds import (
    ContinuedFraction,
    Slope,
    canonical_coil_slope,
    cfrac_eval,
    cfrac_expand,
    mirror_slope,
    reduce_slope,
)

print("Reduction and normalization")
print("  4/10   ->", reduce_slope(4, 10))
print("  3/-5   ->", reduce_slope(3, -5))
print("  7/0    ->", reduce_slope(7, 0))
print("  7/5    -> canonical", canonical_coil_slope(Slope.parse("7/5")))
print("  -2/5   -> canonical", canonical_coil_slope(Slope.parse("-2/5")))
print()

print("Canonical continued fractions (slope, terms, length k)")
for text in ("1/2", "2/5", "3/5", "5/8", "12/29", "355/1130"):
    s = canonical_coil_slope(Slope.parse(text))
    c = cfrac_expand(s)
    back = cfrac_eval(c)
    assert back == s
    print(f"  {str(s):>9}  {str(c):<22} k = {c.length}")
print()

print("Mirrors: viewing the projection plane from the other side sends")
print("p/q to (q-p)/q; the expansion length moves by at most one.")
for text in ("2/5", "3/5", "1/2", "5/13"):
    s = Slope.parse(text)
    m = mirror_slope(s)
    print(
        f"  {s} (k={cfrac_expand(s).length})  <->  {m} (k={cfrac_expand(m).length})"
    )
print()

print("Fibonacci ratios maximize k for their size: every term is 1")
print("until the closing 2.")
a, b = 1, 2
for _ in range(6):
    c = cfrac_expand(Slope(a, b))
    print(f"  {a}/{b}: {c} (k={c.length})")
    a, b = b, a + b
