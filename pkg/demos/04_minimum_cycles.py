"""Lightest cycle in a homology class.

Search the covering from (u, 0) to (u, i) with Dijkstra, for every u on one
basis cycle, and keep the best. The projected walk is the answer.

Run: python3 demos/04_minimum_cycles.py
"""

import random

from homcycle import WeightFunction, build_index_function, generate, min_cycle_in_class
from homcycle.complex import Chain
from homcycle.index import sheet_bits

b = generate("genus2_polygon")
c = b.complex
t = build_index_function(c, b.hn1)
unit = WeightFunction.unit(c)

print("genus-2 surface, unit weights")
for g in range(1, 1 << t.r):
    x = Chain(1, 0)
    for k, h in enumerate(b.h1):
        if (g >> k) & 1:
            x = x + h
    res = min_cycle_in_class(t, c, unit, b.hn1, x)
    print(f"  h1 combination {g:2d}, index {sheet_bits(res.class_index, t.r)}: weight {res.weight:.0f} (input had {len(x)} edges)")

rng = random.Random(1)
L = WeightFunction([rng.uniform(0.5, 2.0) for _ in range(c.count(1))])
x = b.h1[0] + b.h1[2]
res = min_cycle_in_class(t, c, L, b.hn1, x)
print("\nrandom weights, class of h0+h2")
print("  input weight :", round(L(x), 4))
print("  output weight:", round(res.weight, 4))
print("  witness walk :", " ".join(f"{v}@{sheet_bits(s, t.r)}" for v, s in res.witness))

# a big torus: still quick because the covering is never built
big = generate("torus_grid(30,30)")
tb = build_index_function(big.complex, big.hn1)
res = min_cycle_in_class(tb, big.complex, WeightFunction.unit(big.complex), big.hn1, big.h1[0] + big.h1[1])
print("\n30x30 torus diagonal class:", res.weight, "edges")
