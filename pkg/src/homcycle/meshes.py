"""Bundled triangulations with curated bases.

Each generator returns a :class:`MeshBundle`: the complex, a basis of
H_{n-1} made of simple cycles (input to the index function) and a basis of H_1.
For surfaces both bases are lists of embedded loops.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations

from .complex import SimplicialComplex, build_complex, verify_closed_pseudomanifold
from .errors import BadParams, NonManifold
from .homology import HomologyBasis, h1_basis, hn1_basis


@dataclass
class MeshBundle:
    name: str
    complex: SimplicialComplex
    hn1: HomologyBasis
    h1: HomologyBasis

    @property
    def r(self) -> int:
        return self.hn1.rank


def _bundle(name, c, hn1_cycles, h1_cycles) -> MeshBundle:
    rep = verify_closed_pseudomanifold(c)
    if not rep.ok:
        raise NonManifold(f"{name}: {rep.violations[0]}")
    return MeshBundle(name, c, hn1_basis(c, hn1_cycles), h1_basis(c, h1_cycles))


def _loop(c, verts):
    return c.path_chain(list(verts) + [verts[0]])


def sphere_tet() -> MeshBundle:
    """Boundary of the tetrahedron: the smallest triangulated 2-sphere."""
    top = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    c = build_complex(2, top)
    return _bundle("sphere_tet", c, [], [])


RP2_6_TRIANGLES = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
]


def rp2_6() -> MeshBundle:
    """Six-vertex projective plane (cone over a pentagon plus the pentagram triangles)."""
    c = build_complex(2, RP2_6_TRIANGLES)
    loop = _loop(c, (0, 1, 3))
    return _bundle("rp2_6", c, [loop], [loop])


def _grid_vertex(p, q):
    def vid(i, j):
        return (i % p) + p * (j % q)
    return vid


def _check_sides(name, *sides):
    if any(int(s) < 3 for s in sides):
        raise BadParams(f"{name}: every grid side must be >= 3, got {sides}")


def _torus_top(p, q, vid):
    top = []
    for j in range(q):
        for i in range(p):
            a, b, d, e = vid(i, j), vid(i + 1, j), vid(i, j + 1), vid(i + 1, j + 1)
            top.append((a, b, e))
            top.append((a, d, e))
    return top


def torus_grid(p: int = 3, q: int = 3) -> MeshBundle:
    """p x q torus grid, each square split along its (i,j)-(i+1,j+1) diagonal.

    Vertex (i, j) has id ``i + p*j``. The curated loops are the row j=0
    (meridian) and the column i=0 (longitude).
    """
    _check_sides("torus_grid", p, q)
    vid = _grid_vertex(p, q)
    c = build_complex(2, _torus_top(p, q, vid))
    meridian = _loop(c, [vid(i, 0) for i in range(p)])
    longitude = _loop(c, [vid(0, j) for j in range(q)])
    return _bundle(f"torus_grid({p},{q})", c, [meridian, longitude], [meridian, longitude])


def klein_grid(p: int = 4, q: int = 4) -> MeshBundle:
    """p x q Klein bottle grid: rows wrap plainly, columns wrap with i -> -i.

    The curated loops are the row j=0 (two-sided) and the column i=0
    (one-sided).
    """
    _check_sides("klein_grid", p, q)

    def vid(i, j):
        if j >= q:
            i, j = -i, j - q
        return (i % p) + p * j

    c = build_complex(2, _torus_top(p, q, vid))
    row = _loop(c, [vid(i, 0) for i in range(p)])
    col = _loop(c, [vid(0, j) for j in range(q)])
    return _bundle(f"klein_grid({p},{q})", c, [row, col], [row, col])


def genus2_polygon(p: int = 3, q: int = 3) -> MeshBundle:
    """Closed orientable genus-2 surface.

    Two torus grids are glued along the boundary of one removed triangle each,
    which realizes the octagon word a b a' b' c d c' d'. The curated loops are
    the meridian and longitude of each handle.
    """
    _check_sides("genus2_polygon", p, q)
    vid = _grid_vertex(p, q)
    nv = p * q
    hole = (vid(1, 1), vid(2, 1), vid(2, 2))
    first = [t for t in _torus_top(p, q, vid) if tuple(sorted(t)) != tuple(sorted(hole))]
    glue = {hole[k]: hole[k] for k in range(3)}

    def second_id(v):
        if v in glue:
            return glue[v]
        # shift and close the gap left by the three glued vertices
        return nv + v - sum(1 for h in hole if h < v)

    second = [
        tuple(second_id(v) for v in t)
        for t in _torus_top(p, q, vid)
        if tuple(sorted(t)) != tuple(sorted(hole))
    ]
    c = build_complex(2, first + second)
    loops = []
    for shift in (lambda v: v, second_id):
        loops.append(_loop(c, [shift(vid(i, 0)) for i in range(p)]))
        loops.append(_loop(c, [shift(vid(0, j)) for j in range(q)]))
    return _bundle(f"genus2_polygon({p},{q})", c, loops, loops)


def torus3_grid(p: int = 3, q: int = 3, s: int = 3) -> MeshBundle:
    """3-torus from a p x q x s cube grid; each cube is cut into the 6 Kuhn tetrahedra.

    Vertex (i, j, k) has id ``i + p*(j + q*k)``. The curated H_2 basis is the
    three coordinate tori x=0, y=0, z=0; the H_1 basis is the three axis loops
    through the origin.
    """
    _check_sides("torus3_grid", p, q, s)
    dims = (p, q, s)

    def vid(x):
        return (x[0] % p) + p * ((x[1] % q) + q * (x[2] % s))

    top = []
    for k in range(s):
        for j in range(q):
            for i in range(p):
                for perm in permutations(range(3)):
                    x = [i, j, k]
                    simplex = [vid(x)]
                    for axis in perm:
                        x[axis] += 1
                        simplex.append(vid(x))
                    top.append(tuple(simplex))
    c = build_complex(3, top)

    planes = []
    for axis in range(3):
        tris = [t for t in c.simplices[2] if all(_coord(v, dims)[axis] == 0 for v in t)]
        planes.append(c.chain(2, tris))
    loops = []
    for axis in range(3):
        path = []
        for m in range(dims[axis]):
            x = [0, 0, 0]
            x[axis] = m
            path.append(vid(x))
        loops.append(_loop(c, path))
    return _bundle(f"torus3_grid({p},{q},{s})", c, planes, loops)


def _coord(v, dims):
    p, q, _ = dims
    return (v % p, (v // p) % q, v // (p * q))


GENERATORS = {
    "sphere_tet": sphere_tet,
    "rp2_6": rp2_6,
    "torus_grid": torus_grid,
    "klein_grid": klein_grid,
    "genus2_polygon": genus2_polygon,
    "torus3_grid": torus3_grid,
}

_SPEC_RE = re.compile(r"^\s*([a-z0-9_]+)\s*(?:[(:]\s*([0-9,\s]*)\)?)?\s*$")


def generate(name: str, *params) -> MeshBundle:
    """Build a bundled mesh by family name, e.g. ``generate("torus_grid", 3, 3)``.

    ``name`` may also carry its parameters: ``"torus_grid(3,3)"`` or
    ``"torus_grid:3,3"``.
    """
    m = _SPEC_RE.match(name)
    if not m or m.group(1) not in GENERATORS:
        raise BadParams(f"unknown mesh family {name!r}; choose from {', '.join(GENERATORS)}")
    family, inline = m.group(1), m.group(2)
    if inline and params:
        raise BadParams("parameters given twice")
    if inline:
        try:
            params = tuple(int(x) for x in inline.split(",") if x.strip())
        except ValueError:
            raise BadParams(f"bad parameters in {name!r}") from None
    try:
        return GENERATORS[family](*params)
    except TypeError as exc:
        raise BadParams(f"{family}: {exc}") from None


def bundled_names() -> list:
    """Mesh names exercised by the acceptance suite."""
    return [
        "sphere_tet",
        "rp2_6",
        "torus_grid(3,3)",
        "klein_grid(4,4)",
        "genus2_polygon",
        "torus3_grid(3,3,3)",
    ]
