"""The secant stratification: geometric membership tests versus signatures.

Five nested sets (the degree-1 span A, the ruling-aligned join B, the conic
join U, the tangent side, the secant side) carve the exterior of the scroll
into the six strata.  The decision tree must agree with the rank-based
signature on every point; any disagreement is a loud failure.

Run with:  python demos/04_stratification.py
"""

import random

from scrollsec import (
    contains,
    field_make,
    member_A,
    member_B,
    member_U,
    normalize_point,
    scroll_new,
    stratum_geometric,
)

ctx = field_make(101, 1)
spec = scroll_new([1, 1, 3])

print("membership of hand-picked points on S(1,1,3):")
pts = {
    "span of the two lines": (1, 2, 3, 4, 0, 0, 0, 0),
    "block aligned to x=(1:2)": (3, 1, 1, 2, 4, 8),
}
p = (1, 2, 3, 4, 0, 0, 0, 0)
print("  A:", member_A(spec, ctx, p), " B:", member_B(spec, ctx, p), " U:", member_U(spec, ctx, p))
rep = stratum_geometric(spec, ctx, p)
print("  stratum:", rep.label_geom, " agrees with signature:", rep.agrees_with_signature)

print("\ncensus of 300 random exterior points of S(1,2) over GF(101):")
spec12 = scroll_new([1, 2])
rng = random.Random(1)
census = {}
for _ in range(300):
    while True:
        q = tuple(ctx.rand(rng) for _ in range(spec12.ambient + 1))
        if any(q):
            q = normalize_point(ctx, q)
            if not contains(spec12, ctx, q):
                break
    rep = stratum_geometric(spec12, ctx, q)
    assert rep.agrees_with_signature
    census[rep.label_geom] = census.get(rep.label_geom, 0) + 1
for label, count in sorted(census.items()):
    print(f"  {label:10s} {count}")
print("(every exterior point of the cubic surface scroll has a 1-dimensional locus)")
