"""Index function: per-edge Z2^r vectors that detect the Z2 homology class of 1-cycles.

Coordinate k of ``J(a)`` is the parity with which edge ``a`` crosses a copy of
the k-th basis (n-1)-cycle pushed off itself, so the XOR of ``J`` over the
edges of a 1-cycle is its vector of intersection numbers with the basis.
Group elements of Z2^r are ints: bit k holds coordinate k.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Chain, SimplicialComplex, is_cycle, verify_closed_pseudomanifold
from .errors import BadDimension, EmptyLocalSide, NonManifold, NotACycle, NotSimple, NotSimpleBasis
from .homology import HomologyBasis, is_simple_cycle
from .z2 import bits_of


def sheet_bits(g: int, r: int) -> str:
    """Bit-string of a group element, coordinate 0 first."""
    return "".join("1" if (g >> k) & 1 else "0" for k in range(r))


def parse_sheet(bits: str) -> int:
    g = 0
    for k, ch in enumerate(bits):
        if ch == "1":
            g |= 1 << k
        elif ch != "0":
            raise ValueError(f"bad sheet bit-string {bits!r}")
    return g


@dataclass
class CyclePass:
    """Audit record of one basis cycle's pass.

    ``plane`` is the chain M_k as an edge bit-mask (equal to coordinate k of J).
    ``local_edges[u]`` / ``local_side[u]`` are M_k(u) and Sigma_k(u);
    ``crossed[u]`` lists the (n-1)-faces crossed during u's flood fill, in order.
    """

    plane: int = 0
    local_edges: dict = field(default_factory=dict)
    local_side: dict = field(default_factory=dict)
    crossed: dict = field(default_factory=dict)
    reseeds: int = 0


@dataclass
class IndexTable:
    r: int
    J: list
    passes: list
    basis: list

    @property
    def planes(self) -> list:
        return [p.plane for p in self.passes]

    def value(self, edge: int) -> int:
        return self.J[edge]

    def __call__(self, x: Chain) -> int:
        return index_of_chain(self, x)

    def to_json(self, c: SimplicialComplex | None = None) -> str:
        """Stable JSON dump.

        ``J`` maps edge labels ``"u-v"`` to hex strings of the group element
        (bit k = coordinate k); the audit sets list edge and simplex vertex labels.
        """
        def elabel(e):
            if c is None:
                return str(e)
            a, b = c.edges[e]
            return f"{c.label(a)}-{c.label(b)}"

        def slabel(i):
            if c is None:
                return i
            return [c.label(v) for v in c.simplices[c.n][i]]

        def vlabel(u):
            return str(c.label(u)) if c is not None else str(u)

        doc = {
            "r": self.r,
            "J": {elabel(e): format(g, "x") for e, g in enumerate(self.J)},
            "cycles": [
                {
                    "M": [elabel(e) for e in bits_of(p.plane)],
                    "M_u": {vlabel(u): [elabel(e) for e in sorted(es)] for u, es in p.local_edges.items()},
                    "Sigma_u": {vlabel(u): [slabel(i) for i in sorted(ss)] for u, ss in p.local_side.items()},
                    "reseeds": p.reseeds,
                }
                for p in self.passes
            ],
        }
        return json.dumps(doc, indent=2)


def _cycle_pass(c: SimplicialComplex, X: Chain) -> CyclePass:
    n = c.n
    top_faces = c.faces[n]
    cof = c.cofaces[n - 1]
    ridges = c.simplices[n - 1]
    in_X = set(X)
    x_vertices = sorted({v for i in in_X for v in ridges[i]})
    x_edges = set()
    for i in in_X:
        for a, b in combinations(ridges[i], 2):
            x_edges.add(c.edge_id(a, b))

    out = CyclePass()
    for u in x_vertices:
        star = c.vertex_star(u)
        in_star = set(star)
        remaining = set(star)
        mu = set()
        crossed = []
        local_edges: set = set()
        side: set = set()
        while not local_edges:
            if not remaining:
                raise EmptyLocalSide(
                    f"no indexable edge on either side of the cycle at vertex {c.label(u)}"
                )
            if side:
                out.reseeds += 1
            seed = min(remaining)
            remaining.discard(seed)
            side = {seed}
            queue = deque([seed])
            while queue:
                s = queue.popleft()
                for f in top_faces[s]:
                    if f in in_X or f in mu:
                        continue
                    other = [t for t in cof[f] if t != s and t in in_star]
                    if not other:
                        continue
                    t = other[0]
                    mu.add(f)
                    crossed.append(f)
                    side.add(t)
                    if t in remaining:
                        remaining.discard(t)
                        queue.append(t)
                    for w in ridges[f]:
                        if w != u:
                            e = c.edge_id(u, w)
                            if e not in x_edges:
                                local_edges.add(e)
        for e in local_edges:
            out.plane ^= 1 << e
        out.local_edges[u] = frozenset(local_edges)
        out.local_side[u] = frozenset(side)
        out.crossed[u] = tuple(crossed)

    tri_cof = c.cofaces[1] if n >= 2 else []
    tris = c.simplices[2] if n >= 2 else []
    for a in sorted(x_edges):
        u, v = c.edges[a]
        Mu, Mv = out.local_edges[u], out.local_edges[v]
        compatible = False
        for t in tri_cof[a]:
            w = next(x for x in tris[t] if x != u and x != v)
            if c.edge_id(u, w) in Mu and c.edge_id(v, w) in Mv:
                compatible = True
                break
        if not compatible:
            out.plane |= 1 << a
    return out


def build_index_function(c: SimplicialComplex, basis, jobs: int = 1) -> IndexTable:
    """Index every edge relative to a list of simple (n-1)-cycles.

    ``basis`` is a HomologyBasis or any sequence of (n-1)-chains; cycles are
    processed independently (``jobs`` > 1 fans them out to threads).
    """
    if c.n < 2:
        raise BadDimension("the index function needs a complex of dimension >= 2")
    cycles = list(basis.cycles if isinstance(basis, HomologyBasis) else basis)
    rep = verify_closed_pseudomanifold(c)
    if not rep.ok:
        raise NonManifold(rep.violations[0])
    for k, z in enumerate(cycles):
        if z.dim != c.n - 1:
            raise NotSimpleBasis(f"cycle {k} is a {z.dim}-chain, expected dimension {c.n - 1}")
        try:
            simple = is_simple_cycle(c, z)
        except NotACycle:
            raise NotSimpleBasis(f"cycle {k} has nonempty boundary") from None
        if not simple:
            raise NotSimpleBasis(f"cycle {k} is not simple")

    if jobs > 1 and len(cycles) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            passes = list(pool.map(lambda z: _cycle_pass(c, z), cycles))
    else:
        passes = [_cycle_pass(c, z) for z in cycles]

    J = [0] * c.count(1)
    for k, p in enumerate(passes):
        for e in bits_of(p.plane):
            J[e] |= 1 << k
    return IndexTable(len(cycles), J, passes, cycles)


def index_of_chain(t: IndexTable, x: Chain) -> int:
    g = 0
    J = t.J
    for e in x:
        g ^= J[e]
    return g


def single_cycle_index(c: SimplicialComplex, z: Chain, x: Chain) -> int:
    """Intersection number mod 2 of an (n-1)-cycle ``z`` with a 1-cycle ``x``."""
    if x.dim != 1 or c.n < 2:
        raise NotACycle("x must be a 1-chain")
    if not is_cycle(c, x):
        raise NotACycle("x has nonempty boundary")
    try:
        simple = is_simple_cycle(c, z)
    except NotACycle:
        raise NotACycle("z has nonempty boundary") from None
    if not simple:
        raise NotSimple("z is not a simple cycle")
    return index_of_chain(build_index_function(c, [z]), x)
