"""The index function: per-edge vectors that detect homology classes.

Every edge gets a vector in Z2^r, one bit per basis (n-1)-cycle. Summing the
vectors along a 1-cycle gives its intersection numbers with the basis, so two
cycles get the same index exactly when they are homologous.

Run: python3 demos/02_index_function.py
"""

import random

from homcycle import build_index_function, generate, index_of_chain, is_null_homologous
from homcycle.complex import Chain, boundary_chain
from homcycle.index import sheet_bits

b = generate("torus_grid(3,3)")
c = b.complex
t = build_index_function(c, b.hn1)
print("r =", t.r)
for k, p in enumerate(t.passes):
    print(f"cycle {k}: {len(c.chain_simplices(b.hn1[k]))} edges, plane M_{k} has {bin(p.plane).count('1')} edges")

mer, lon = b.hn1
print("index of meridian :", sheet_bits(index_of_chain(t, mer), t.r))
print("index of longitude:", sheet_bits(index_of_chain(t, lon), t.r))

# every triangle boundary gets index 0
zeros = all(index_of_chain(t, boundary_chain(c, Chain(2, 1 << i))) == 0 for i in range(c.count(2)))
print("all triangle boundaries have index 0:", zeros)

# random pairs of cycles: equal index <=> homologous
rng = random.Random(0)
masks = c.boundary_masks(2)
agree = 0
for _ in range(200):
    x = Chain(1, 0)
    for h in b.h1:
        if rng.random() < 0.5:
            x = x + h
    y = x if rng.random() < 0.5 else x + b.h1[rng.randrange(2)]
    for _ in range(3):
        y = y + Chain(1, masks[rng.randrange(len(masks))])
    agree += (index_of_chain(t, x) == index_of_chain(t, y)) == is_null_homologous(c, x + y)
print(f"{agree}/200 random pairs agree with the linear-algebra test")

# same thing on the 3-torus, where the basis cycles are 2-dimensional planes
b3 = generate("torus3_grid(3,3,3)")
t3 = build_index_function(b3.complex, b3.hn1)
print("\n3-torus loops:", [sheet_bits(index_of_chain(t3, h), 3) for h in b3.h1])
