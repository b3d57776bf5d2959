"""Build a few closed surfaces and read off their Z2 homology.

Run: python3 demos/01_complexes_and_homology.py
"""

from homcycle import betti_numbers, build_complex, generate, is_null_homologous, verify_closed_pseudomanifold
from homcycle.complex import Chain, boundary_chain

# The boundary of a tetrahedron is the smallest triangulated sphere.
tet = build_complex(2, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
print("tetrahedron f-vector:", tet.f_vector(), "chi =", tet.euler_characteristic())
print("closed pseudomanifold?", verify_closed_pseudomanifold(tet).ok)

# A lone triangle is not closed: each of its edges has one coface.
tri = build_complex(2, [(0, 1, 2)])
print(verify_closed_pseudomanifold(tri))

# Chains are just bit-masks over simplex indices.
t = tet.chain(2, [(0, 1, 2)])
print("boundary of [0,1,2]:", tet.chain_simplices(boundary_chain(tet, t)))
print("boundary of boundary is empty:", not boundary_chain(tet, boundary_chain(tet, Chain(2, 0b1111))))

print()
for name in ["sphere_tet", "rp2_6", "torus_grid(3,3)", "klein_grid(4,4)", "genus2_polygon", "torus3_grid(3,3,3)"]:
    b = generate(name)
    c = b.complex
    print(f"{b.name:22s} f={c.f_vector()}  betti={betti_numbers(c)}  chi={c.euler_characteristic()}")

# The 3-edge loop on the six-vertex projective plane does not bound.
rp = generate("rp2_6")
loop = rp.h1[0]
print("\nrp2_6 loop edges:", rp.complex.chain_simplices(loop))
print("null-homologous?", is_null_homologous(rp.complex, loop))
print("twice the loop:", is_null_homologous(rp.complex, loop + loop))
