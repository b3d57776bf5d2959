"""The Z2^r covering, kept implicit, and a look at its explicit version.

A covering vertex is a (vertex, sheet) pair. Walking along an edge flips the
sheet by that edge's index, so a closed loop lifts to a closed loop exactly when
it is null-homologous.

Run: python3 demos/03_covering.py
"""

from homcycle import build_index_function, generate, lift_path, materialize_cover
from homcycle.covering import CoveringVertex, covering_neighbors
from homcycle.index import sheet_bits
from homcycle.io import serialize_mesh

b = generate("rp2_6")
c = b.complex
t = build_index_function(c, b.hn1)

print("neighbors of (0, 0):", [(w, sheet_bits(g, t.r)) for w, g in covering_neighbors(t, c, CoveringVertex(0, 0))])

for name, path in [("triangle", [0, 1, 2, 0]), ("generator", [0, 1, 3, 0]), ("generator twice", [0, 1, 3, 0, 1, 3, 0])]:
    end = lift_path(t, c, path)[-1]
    print(f"lift of {name:16s} ends at ({end.base}, {sheet_bits(end.sheet, t.r)})")

m = materialize_cover(t, c)
cx = m.complex
print("\ndouble cover of rp2_6: f =", cx.f_vector(), "chi =", cx.euler_characteristic(), "(a sphere)")
print(serialize_mesh(cx).splitlines()[:5])

bt = generate("torus_grid(3,3)")
tt = build_index_function(bt.complex, bt.hn1)
mt = materialize_cover(tt, bt.complex)
print("4-sheeted cover of the 3x3 torus: f =", mt.complex.f_vector(), "chi =", mt.complex.euler_characteristic())
