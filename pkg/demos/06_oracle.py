"""Brute-force cross-validation over tiny fields.

Every fast-path answer has a slow twin: exhaustive point enumeration plus the
pairwise line test.  Over GF(5) and GF(25) the two must agree point for point.

Run with:  python demos/06_oracle.py
"""

import random

from scrollsec import (
    brute_membership,
    brute_secant_locus,
    check_lift_equalities,
    contains,
    enumerate_points,
    field_make,
    normalize_point,
    scroll_new,
    secant_locus_points,
    stratum_geometric,
)

f5 = field_make(5, 1)
f25 = field_make(5, 2)

spec = scroll_new([1, 2], 0)  # cone over the cubic surface scroll
table = enumerate_points(spec, f5)
print(f"{spec!r} has {len(table.points)} points over GF(5)")

rng = random.Random(3)
while True:
    p = tuple(f5.rand(rng) for _ in range(spec.ambient + 1))
    if any(p):
        p = normalize_point(f5, p)
        if not contains(spec, f5, p):
            break

brute = brute_secant_locus(spec, f25, p)
fast = secant_locus_points(spec, f25, p)
print(f"\nfor p = {p}: brute locus has {len(brute)} GF(25)-points, fast path {len(fast)},",
      "equal" if brute == fast else "DIFFERENT")

brep = brute_membership(spec, f25, p)
frep = stratum_geometric(spec, f5, p)
print("brute stratum:", brep.label_geom, "| fast stratum:", frep.label_geom,
      "| reports equal:", brep == frep)

print("cone-lift identities:", check_lift_equalities(spec, f25, p) or "hold")
