"""Minimum-weight cycles via label-setting search on the implicit covering.

The search runs over pairs (vertex, sheet). A closed walk from u returns to u
on sheet J(walk), so the lightest walk from (u, 0) to (u, i) projects to the
lightest cycle through u in the class with index i.
"""

from __future__ import annotations

import heapq
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .complex import Chain, SimplicialComplex, boundary_chain
from .errors import BadParams, IndexZero, NotACycle, Unreachable
from .homology import HomologyBasis
from .index import IndexTable, index_of_chain


class WeightFunction:
    """Nonnegative per-edge weights, extended to chains by summation."""

    def __init__(self, weights):
        weights = [float(w) for w in weights]
        for e, w in enumerate(weights):
            if not w >= 0 or math.isinf(w):
                raise BadParams(f"edge {e} has invalid weight {w}")
        self.weights = weights

    @classmethod
    def unit(cls, c: SimplicialComplex) -> "WeightFunction":
        return cls([1.0] * c.count(1))

    def __getitem__(self, e: int) -> float:
        return self.weights[e]

    def __len__(self):
        return len(self.weights)

    def __call__(self, x: Chain) -> float:
        return chain_weight(self, x)


def chain_weight(L: WeightFunction, x: Chain) -> float:
    w = L.weights
    return math.fsum(w[e] for e in x)


def _lex_key(g: int, r: int) -> int:
    """Integer whose order is the lexicographic order of g's bit-string (coordinate 0 first)."""
    out = 0
    for k in range(r):
        out = (out << 1) | ((g >> k) & 1)
    return out


@dataclass
class SearchStats:
    settled: list = field(default_factory=list)
    distances: list = field(default_factory=list)


@dataclass
class MinCycleResult:
    cycle: Chain
    weight: float
    path_weight: float
    witness: list
    class_index: int
    r: int
    start: int | None = None

    @property
    def vertices_on_path(self) -> set:
        return {v for v, _ in self.witness}


def min_cycle_fixed_vertex_index(
    t: IndexTable,
    c: SimplicialComplex,
    L: WeightFunction,
    u: int,
    i: int,
    stats: SearchStats | None = None,
) -> MinCycleResult:
    """Lightest cycle through ``u`` whose index is ``i`` (``i != 0``).

    Ties in the frontier go to the smaller distance, then smaller vertex id,
    then the lexicographically smaller sheet.
    """
    if i == 0:
        raise IndexZero("index 0 is the zero class; its minimal cycle is empty")
    if i >> t.r:
        raise BadParams(f"index {i:#x} has more than {t.r} bits")
    r = t.r
    J = t.J
    W = L.weights
    start = (u, 0)
    target = (u, i)
    dist = {start: 0.0}
    pred = {}
    settled = {start}
    heap = []
    for v in c.neighbors(u):
        e = c.edge_id(u, v)
        key = (v, J[e])
        d = W[e]
        if key not in dist or d < dist[key]:
            dist[key] = d
            pred[key] = start
            heapq.heappush(heap, (d, v, _lex_key(J[e], r), J[e]))

    found = False
    while heap:
        d, w, _, k = heapq.heappop(heap)
        state = (w, k)
        if state in settled or d > dist[state]:
            continue
        if state == target:
            found = True
            break
        settled.add(state)
        if stats is not None:
            stats.settled.append(state)
            stats.distances.append(d)
        for v in c.neighbors(w):
            e = c.edge_id(w, v)
            j = k ^ J[e]
            nxt = (v, j)
            if nxt in settled:
                continue
            nd = d + W[e]
            old = dist.get(nxt)
            if old is None or nd < old:
                dist[nxt] = nd
                pred[nxt] = state
                heapq.heappush(heap, (nd, v, _lex_key(j, r), j))
    if not found:
        raise Unreachable(f"state ({c.label(u)}, {i:#x}) is not reachable from ({c.label(u)}, 0)")

    witness = [target]
    bits = 0
    state = target
    while state != start:
        prev = pred[state]
        bits ^= 1 << c.edge_id(prev[0], state[0])
        witness.append(prev)
        state = prev
    witness.reverse()
    z = Chain(1, bits)
    return MinCycleResult(z, chain_weight(L, z), dist[target], witness, i, r, u)


def min_cycle_in_class(
    t: IndexTable,
    c: SimplicialComplex,
    L: WeightFunction,
    basis,
    x: Chain,
    jobs: int = 1,
) -> MinCycleResult:
    """Lightest cycle homologous to ``x``.

    Searches from every vertex of the first basis cycle that ``x`` crosses an
    odd number of times and keeps the lightest result (earliest vertex on ties).
    """
    if x.dim != 1 or boundary_chain(c, x):
        raise NotACycle("x must be a 1-cycle")
    i = index_of_chain(t, x)
    if i == 0:
        return MinCycleResult(Chain(1, 0), 0.0, 0.0, [], 0, t.r, None)
    cycles = basis.cycles if isinstance(basis, HomologyBasis) else list(basis)
    k = (i & -i).bit_length() - 1
    ridges = c.simplices[c.n - 1]
    verts = sorted({v for s in cycles[k] for v in ridges[s]})

    def run(v):
        return min_cycle_fixed_vertex_index(t, c, L, v, i)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, verts))
    else:
        results = [run(v) for v in verts]
    best = results[0]
    for res in results[1:]:
        if res.weight < best.weight:
            best = res
    return best
