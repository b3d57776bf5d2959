"""Independent verifiers that share no code path with the covering search.

* :func:`brute_min_in_class` walks the whole coset x + B_1 in Gray-code order.
* :func:`elimination_min_in_class` minimizes over the same coset exactly by
  min-sum variable elimination on the 2-chain that is added to x; it handles
  cosets far beyond enumeration reach as long as the elimination width is small.
* :func:`cup_form_invariants` computes the Z2 cup-product form of a surface.

Weights are converted to exact integers (every float is a dyadic rational),
so minima are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import z2
from .complex import Chain, SimplicialComplex, boundary_chain
from .errors import BadDimension, BudgetExceeded, NotACycle
from .homology import boundary_rank


@dataclass
class CosetMinimum:
    weight: float
    chain: Chain
    exact: Fraction
    coset_log2: int
    method: str


def _exact_weights(weights) -> tuple[list, int]:
    fr = [Fraction(w) for w in weights]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * den) for f in fr], den


def _lex_less(a: int, b: int) -> bool:
    """Bit-vector order comparing coordinate 0 first."""
    d = a ^ b
    if not d:
        return False
    return not (a & (d & -d))


def _check_x(c, x):
    if x.dim != 1 or boundary_chain(c, x):
        raise NotACycle("x must be a 1-cycle")


def boundary_space_basis(c: SimplicialComplex) -> list:
    """Triangle indices whose boundaries form a basis of B_1 (greedy, index order)."""
    masks = c.boundary_masks(2)
    ech: dict = {}
    chosen = []
    for i, m in enumerate(masks):
        red = z2.reduce_vector(m, ech)
        if red:
            ech[red.bit_length() - 1] = red
            chosen.append(i)
    return chosen


def brute_min_in_class(c: SimplicialComplex, L, x: Chain, budget: int = 1 << 17) -> CosetMinimum:
    """Exact minimum weight over every cycle homologous to ``x``.

    Ties go to the lexicographically smallest edge bit-vector (edge 0 first).
    """
    _check_x(c, x)
    weights = L.weights if hasattr(L, "weights") else list(L)
    iw, den = _exact_weights(weights)
    basis = boundary_space_basis(c) if c.n >= 2 else []
    m = len(basis)
    if (1 << m) > budget:
        raise BudgetExceeded(f"coset has 2^{m} elements, budget is {budget}")
    masks = c.boundary_masks(2) if m else []
    steps = [(masks[t], tuple(z2.bits_of(masks[t]))) for t in basis]

    cur = x.bits
    wcur = sum(iw[e] for e in z2.bits_of(cur))
    best, best_bits = wcur, cur
    for it in range(1, 1 << m):
        mask, edges = steps[(it & -it).bit_length() - 1]
        for e in edges:
            if (cur >> e) & 1:
                wcur -= iw[e]
            else:
                wcur += iw[e]
        cur ^= mask
        if wcur < best or (wcur == best and _lex_less(cur, best_bits)):
            best, best_bits = wcur, cur
    exact = Fraction(best, den)
    return CosetMinimum(float(exact), Chain(1, best_bits), exact, m, "gray-code")


def _elimination_order(scopes, nvars):
    adj = [set() for _ in range(nvars)]
    for sc in scopes:
        for a in sc:
            adj[a].update(sc)
    for a in range(nvars):
        adj[a].discard(a)
    alive = set(range(nvars))
    order = []
    while alive:
        v = min(alive, key=lambda a: (len(adj[a]), a))
        nb = adj[v]
        for a in nb:
            adj[a].update(nb)
            adj[a].discard(a)
            adj[a].discard(v)
        alive.discard(v)
        order.append(v)
    return order


def _expand(table, scope, union):
    shape = [2 if v in scope else 1 for v in union]
    return table.reshape(shape)


def elimination_min_in_class(c: SimplicialComplex, L, x: Chain, max_width: int = 16) -> CosetMinimum:
    """Exact coset minimum by min-sum elimination over triangle memberships.

    Every homologous cycle is x + boundary(S) for a 2-chain S. Each edge
    contributes its weight when x and the parity of S around the edge disagree
    with 0, so the cost is a sum of small factors over the triangles at each
    edge. Raises BudgetExceeded if an intermediate factor would span more than
    ``max_width`` triangles.
    """
    _check_x(c, x)
    if c.n < 2:
        raise BadDimension("needs a complex of dimension >= 2")
    weights = L.weights if hasattr(L, "weights") else list(L)
    iw, den = _exact_weights(weights)
    ntri = c.count(2)
    factors = []
    const = 0
    for e, cof in enumerate(c.cofaces[1]):
        xe = (x.bits >> e) & 1
        if not cof:
            const += iw[e] * xe
            continue
        scope = tuple(sorted(cof))
        size = len(scope)
        if size > max_width:
            raise BudgetExceeded(f"edge {e} lies in {size} triangles")
        table = np.empty(1 << size, dtype=object)
        for idx in range(1 << size):
            # axis order: scope[0] is the most significant index bit
            parity = bin(idx).count("1") & 1
            table[idx] = iw[e] if parity ^ xe else 0
        factors.append((scope, table.reshape((2,) * size)))

    order = _elimination_order([f[0] for f in factors], ntri)
    trace = []
    pending = list(factors)
    for v in order:
        mine = [f for f in pending if v in f[0]]
        pending = [f for f in pending if v not in f[0]]
        union = tuple(sorted({a for sc, _ in mine for a in sc} | {v}))
        if len(union) > max_width:
            raise BudgetExceeded(f"elimination width {len(union)} exceeds {max_width}")
        combined = np.zeros((2,) * len(union), dtype=object)
        for sc, tab in mine:
            combined = combined + _expand(tab, sc, union)
        axis = union.index(v)
        reduced = combined.min(axis=axis)
        rest = union[:axis] + union[axis + 1:]
        trace.append((v, union, combined))
        if rest:
            pending.append((rest, reduced))
        else:
            const += reduced.item() if hasattr(reduced, "item") else reduced

    assign = {}
    for v, union, combined in reversed(trace):
        idx = tuple(slice(None) if a == v else assign[a] for a in union)
        col = combined[idx]
        assign[v] = 0 if col[0] <= col[1] else 1

    S = 0
    masks = c.boundary_masks(2)
    for t, bit in assign.items():
        if bit:
            S ^= masks[t]
    y = x.bits ^ S
    best = sum(iw[e] for e in z2.bits_of(y))
    if best != const:
        raise AssertionError("elimination value disagrees with its argmin")
    exact = Fraction(best, den)
    return CosetMinimum(float(exact), Chain(1, y), exact, boundary_rank(c, 2), "elimination")


def coset_min(c: SimplicialComplex, L, x: Chain, budget: int = 1 << 17) -> CosetMinimum:
    """Gray-code enumeration when the coset fits ``budget``, elimination otherwise."""
    if (1 << boundary_rank(c, 2)) <= budget:
        return brute_min_in_class(c, L, x, budget)
    return elimination_min_in_class(c, L, x)


def form_invariants(matrix) -> tuple[int, bool]:
    """(rank over Z2, has a 1 on the diagonal) of a square 0/1 matrix."""
    m = z2.Z2Matrix.from_dense(matrix) if len(matrix) else z2.Z2Matrix.zeros(0, 0)
    odd = any(int(matrix[i][i]) & 1 for i in range(len(matrix)))
    return z2.rank(m), odd


def cohomology_basis_1(c: SimplicialComplex) -> list:
    """1-cocycles (edge bit-masks) whose classes form a basis of H^1."""
    cocycles = z2.kernel_basis(z2.Z2Matrix(tuple(c.boundary_masks(2)), c.count(1)))
    coboundaries = [0] * c.n_vertices
    for e, (a, b) in enumerate(c.edges):
        coboundaries[a] |= 1 << e
        coboundaries[b] |= 1 << e
    ech = z2.echelon(coboundaries)
    kept = []
    for v in cocycles:
        red = z2.reduce_vector(v, ech)
        if red:
            ech[red.bit_length() - 1] = red
            kept.append(v)
    return kept


def cup_product_matrix(c: SimplicialComplex) -> list:
    """Matrix of (a cup b) evaluated on the fundamental class, over an H^1 basis."""
    if c.n != 2:
        raise BadDimension("cup-product form is implemented for surfaces only")
    basis = cohomology_basis_1(c)
    front = []
    back = []
    for a, b, d in c.simplices[2]:
        front.append(c.edge_id(a, b))
        back.append(c.edge_id(b, d))
    r = len(basis)
    Q = [[0] * r for _ in range(r)]
    for i, alpha in enumerate(basis):
        for j, beta in enumerate(basis):
            s = 0
            for f, bk in zip(front, back):
                s ^= ((alpha >> f) & (beta >> bk)) & 1
            Q[i][j] = s
    return Q


def cup_form_invariants(c: SimplicialComplex) -> tuple[int, bool]:
    return form_invariants(cup_product_matrix(c))
