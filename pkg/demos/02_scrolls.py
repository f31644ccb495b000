"""Rational normal scrolls: construction, parametrization, determinantal equations.

Run with:  python demos/02_scrolls.py
"""

from scrollsec import (
    ScrollPoint,
    embed,
    field_make,
    parse_scroll,
    quadric_generators,
    ruling_subspace,
    scroll_new,
    special_subspaces,
    tangent_space,
)

f7 = field_make(7, 1)

# S(1,2) is the cubic surface scroll in P^4; a trailing +cone(h) adds a vertex.
for literal in ("S(3)", "S(1,2)", "S(1,2)+cone(0)", "S(1,1,2,3)"):
    spec = parse_scroll(literal)
    print(
        f"{literal:16s} dim {spec.dim}  ambient P^{spec.ambient}  degree {spec.deg}"
        f"  degree-1 blocks {spec.k}  blocks of degree <= 2: {spec.m}"
    )

spec = scroll_new([1, 2])
print("\npoints are parametrized by a P^1 coordinate, fiber coordinates, vertex part")
pt = ScrollPoint(x=(1, 3), u=(2, 1), z=())
vec = embed(spec, f7, pt)
print("embed S(1,2) at x=(1:3), u=(2:1):", vec)

gens = quadric_generators(spec, f7)
print(f"S(1,2) is cut out by {len(gens)} quadrics; at the embedded point they evaluate to",
      [g.evaluate(vec) for g in gens])

print("\nthe ruling over x=(1:0) is a line:", ruling_subspace(spec, f7, (1, 0)).rows)
print("the tangent plane at that fiber point has dim",
      tangent_space(spec, f7, ScrollPoint((1, 0), (1, 0), ())).pdim)

data = special_subspaces(spec, f7)
print("\nspan of the degree-1 part:", data["A"].rows)
print("span of the degree-2 part:", data["S2span"].rows)
