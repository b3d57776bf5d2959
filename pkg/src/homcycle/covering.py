"""Regular covering with deck group Z2^r, kept implicit.

A covering vertex is a pair (base vertex, sheet); two covering vertices are
adjacent iff their bases are adjacent and their sheets differ by the index of
the base edge. Only :func:`materialize_cover` builds the covering explicitly,
for verification on small meshes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .complex import SimplicialComplex, build_complex
from .errors import BudgetExceeded, DimensionMismatch, NotAPath
from .index import IndexTable, sheet_bits


class CoveringVertex(NamedTuple):
    base: int
    sheet: int


def covering_neighbors(t: IndexTable, c: SimplicialComplex, v: CoveringVertex) -> list:
    base, sheet = v
    J = t.J
    return [CoveringVertex(w, sheet ^ J[c.edge_id(base, w)]) for w in c.neighbors(base)]


def lift_path(t: IndexTable, c: SimplicialComplex, path, g0: int = 0) -> list:
    """Lift a vertex path starting on sheet ``g0``; the sheet accumulates J of the prefix."""
    path = list(path)
    if not path:
        raise NotAPath("empty path")
    if g0 >> t.r:
        raise DimensionMismatch(f"sheet {g0:#x} has more than {t.r} bits")
    lifted = [CoveringVertex(path[0], g0)]
    g = g0
    for a, b in zip(path, path[1:]):
        try:
            e = c.edge_id(a, b)
        except KeyError:
            raise NotAPath(f"{c.label(a)} and {c.label(b)} are not adjacent") from None
        g ^= t.J[e]
        lifted.append(CoveringVertex(b, g))
    return lifted


def deck_act(g: int, v: CoveringVertex, r: int | None = None) -> CoveringVertex:
    if r is not None and g >> r:
        raise DimensionMismatch(f"group element {g:#x} has more than {r} bits")
    return CoveringVertex(v.base, v.sheet ^ g)


def project(vs) -> tuple:
    return tuple(v.base for v in vs)


@dataclass
class MaterializedCover:
    """Explicit covering complex on V x G.

    Covering vertex (v, g) gets id ``v * 2**r + g``. ``simplices[k]`` holds every
    covering k-simplex as a tuple of CoveringVertex sorted by base vertex.
    """

    r: int
    base: SimplicialComplex
    simplices: list
    complex: SimplicialComplex

    def vertex_id(self, v: CoveringVertex) -> int:
        return (v.base << self.r) | v.sheet

    def vertex(self, i: int) -> CoveringVertex:
        return CoveringVertex(i >> self.r, i & ((1 << self.r) - 1))

    def projection(self, i: int) -> int:
        return i >> self.r

    def fiber(self, v: int) -> list:
        return [CoveringVertex(v, g) for g in range(1 << self.r)]


def lift_simplex(t: IndexTable, c: SimplicialComplex, s, g0: int) -> tuple:
    """The covering simplex over base simplex ``s`` whose first vertex sits on sheet ``g0``."""
    v0 = s[0]
    return (CoveringVertex(v0, g0),) + tuple(
        CoveringVertex(v, g0 ^ t.J[c.edge_id(v0, v)]) for v in s[1:]
    )


def materialize_cover(t: IndexTable, c: SimplicialComplex, max_cells: int = 10**6) -> MaterializedCover:
    """Enumerate all covering simplices (every base simplex lifted to every sheet)."""
    sheets = 1 << t.r
    cells = sheets * sum(c.f_vector())
    if cells > max_cells:
        raise BudgetExceeded(f"cover has {cells} cells, budget is {max_cells}")
    simplices = [
        [lift_simplex(t, c, s, g) for s in level for g in range(sheets)]
        for level in c.simplices
    ]
    labels = [f"{c.label(v)}@{sheet_bits(g, t.r)}" for v in range(c.n_vertices) for g in range(sheets)]
    top = [tuple((v.base << t.r) | v.sheet for v in s) for s in simplices[c.n]]
    cx = build_complex(c.n, top, n_vertices=c.n_vertices * sheets, labels=labels)
    return MaterializedCover(t.r, c, simplices, cx)


def satisfies_covering_rule(t: IndexTable, c: SimplicialComplex, verts) -> bool:
    """Membership test for a candidate covering simplex given as CoveringVertex pairs."""
    verts = sorted(verts)
    base = tuple(v.base for v in verts)
    if len(set(base)) != len(base):
        return False
    try:
        c.simplex_id(base)
    except KeyError:
        return False
    v0 = verts[0]
    return all(v0.sheet ^ v.sheet == t.J[c.edge_id(v0.base, v.base)] for v in verts[1:])


def all_pairs_consistent(t: IndexTable, c: SimplicialComplex, verts) -> bool:
    return all(a.sheet ^ b.sheet == t.J[c.edge_id(a.base, b.base)] for a, b in combinations(verts, 2))
