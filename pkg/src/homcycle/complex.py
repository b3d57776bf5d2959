"""Simplicial complexes of closed pseudomanifolds and their Z2 chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import BadArity, BadDimension, DimensionMismatch, DuplicateSimplex
from .z2 import Z2Matrix, bits_of, popcount


@dataclass(frozen=True)
class Chain:
    """A mod-2 k-chain: bit ``i`` set iff the k-simplex with index ``i`` is a member."""

    dim: int
    bits: int = 0

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim:
            raise DimensionMismatch(f"cannot add {self.dim}-chain and {other.dim}-chain")
        return Chain(self.dim, self.bits ^ other.bits)

    __xor__ = __add__

    def __iter__(self):
        return bits_of(self.bits)

    def __len__(self):
        return popcount(self.bits)

    def __bool__(self):
        return self.bits != 0

    def __contains__(self, idx: int) -> bool:
        return bool((self.bits >> idx) & 1)

    @property
    def indices(self) -> list[int]:
        return list(bits_of(self.bits))


@dataclass
class SimplicialComplex:
    """Downward-closed simplicial complex with dense, lexicographic simplex indices.

    ``simplices[k]`` is the sorted list of k-simplices (ascending vertex tuples);
    ``index[k]`` inverts it. ``faces[k][i]`` lists the (k-1)-face indices of
    simplex i, where face j omits vertex j. ``cofaces[k][i]`` lists the
    (k+1)-simplices containing k-simplex i. Treat instances as immutable.
    """

    n: int
    simplices: list
    index: list
    faces: list
    cofaces: list
    labels: list = field(default_factory=list)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def n_vertices(self) -> int:
        return len(self.simplices[0])

    @property
    def edges(self) -> list:
        return self.simplices[1] if self.n >= 1 else []

    def count(self, k: int) -> int:
        return len(self.simplices[k]) if 0 <= k <= self.n else 0

    def f_vector(self) -> tuple:
        return tuple(len(s) for s in self.simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(s) for k, s in enumerate(self.simplices))

    def simplex_id(self, verts) -> int:
        key = tuple(sorted(verts))
        try:
            return self.index[len(key) - 1][key]
        except (KeyError, IndexError):
            raise KeyError(f"{key} is not a simplex") from None

    def edge_id(self, u: int, v: int) -> int:
        return self.index[1][(u, v) if u < v else (v, u)]

    def neighbors(self, v: int) -> list:
        """Vertices adjacent to ``v`` (the list U(v,P)), ascending."""
        nb = self._cache.get("neighbors")
        if nb is None:
            nb = [[] for _ in range(self.n_vertices)]
            for a, b in self.edges:
                nb[a].append(b)
                nb[b].append(a)
            for lst in nb:
                lst.sort()
            self._cache["neighbors"] = nb
        return nb[v]

    def vertex_star(self, v: int) -> list:
        """Indices of top simplices containing ``v``, ascending."""
        st = self._cache.get("star")
        if st is None:
            st = [[] for _ in range(self.n_vertices)]
            for i, s in enumerate(self.simplices[self.n]):
                for w in s:
                    st[w].append(i)
            self._cache["star"] = st
        return st[v]

    def chain(self, k: int, simplices=()) -> Chain:
        """Build a k-chain from vertex tuples; repeated simplices cancel mod 2."""
        bits = 0
        for s in simplices:
            key = tuple(sorted(s))
            if len(key) != k + 1:
                raise BadArity(f"{key} is not a {k}-simplex")
            bits ^= 1 << self.index[k][key]
        return Chain(k, bits)

    def chain_from_indices(self, k: int, indices) -> Chain:
        bits = 0
        for i in indices:
            bits ^= 1 << i
        return Chain(k, bits)

    def chain_simplices(self, c: Chain) -> list:
        return [self.simplices[c.dim][i] for i in c]

    def path_chain(self, path) -> Chain:
        """Mod-2 sum of the edges of a vertex path."""
        bits = 0
        for a, b in zip(path, path[1:]):
            bits ^= 1 << self.edge_id(a, b)
        return Chain(1, bits)

    def boundary_masks(self, k: int) -> list:
        """Per k-simplex bit-mask of its (k-1)-faces."""
        key = ("bd", k)
        masks = self._cache.get(key)
        if masks is None:
            masks = []
            for fs in self.faces[k]:
                m = 0
                for f in fs:
                    m ^= 1 << f
                masks.append(m)
            self._cache[key] = masks
        return masks

    def boundary_matrix(self, k: int) -> Z2Matrix:
        """Matrix of the k-th boundary map: rows are (k-1)-simplices, columns k-simplices."""
        if not 1 <= k <= self.n:
            raise BadDimension(f"boundary_matrix needs 1 <= k <= {self.n}, got {k}")
        key = ("bdm", k)
        m = self._cache.get(key)
        if m is None:
            rows = [0] * len(self.simplices[k - 1])
            for j, fs in enumerate(self.faces[k]):
                for f in fs:
                    rows[f] |= 1 << j
            m = Z2Matrix(tuple(rows), len(self.simplices[k]))
            self._cache[key] = m
        return m

    def label(self, v: int):
        return self.labels[v] if self.labels else v


def build_complex(n: int, top, n_vertices: int | None = None, labels=None) -> SimplicialComplex:
    """Close a list of top simplices downward and index every simplex.

    Vertex ids must be dense nonnegative ints; ``n_vertices`` defaults to
    ``max id + 1``. Duplicate top simplices raise DuplicateSimplex.
    """
    if n < 0:
        raise BadDimension(f"dimension must be nonnegative, got {n}")
    tops = []
    seen = set()
    for t in top:
        t = tuple(int(v) for v in t)
        key = tuple(sorted(t))
        if len(t) != n + 1 or len(set(t)) != n + 1:
            raise BadArity(f"top simplex {t} does not have {n + 1} distinct vertices")
        if key[0] < 0:
            raise BadArity(f"negative vertex id in {t}")
        if key in seen:
            raise DuplicateSimplex(f"top simplex {key} given twice")
        seen.add(key)
        tops.append(key)

    max_v = max((t[-1] for t in tops), default=-1)
    if n_vertices is None:
        n_vertices = max_v + 1
    elif n_vertices <= max_v:
        raise BadArity(f"vertex id {max_v} out of range for {n_vertices} vertices")

    levels = [set() for _ in range(n + 1)]
    levels[n] = seen
    for k in range(n - 1, 0, -1):
        lv = levels[k]
        for s in levels[k + 1]:
            lv.update(combinations(s, k + 1))
    levels[0] = {(v,) for v in range(n_vertices)}

    simplices = [sorted(lv) for lv in levels]
    index = [{s: i for i, s in enumerate(lst)} for lst in simplices]
    faces = [[] for _ in range(n + 1)]
    cofaces = [[[] for _ in lst] for lst in simplices]
    for k in range(1, n + 1):
        below = index[k - 1]
        fk = faces[k]
        for i, s in enumerate(simplices[k]):
            fs = tuple(below[s[:j] + s[j + 1:]] for j in range(k + 1))
            fk.append(fs)
            for f in fs:
                cofaces[k - 1][f].append(i)

    if labels is not None:
        labels = list(labels)
        if len(labels) != n_vertices:
            raise BadArity(f"{len(labels)} labels for {n_vertices} vertices")
    return SimplicialComplex(n, simplices, index, faces, cofaces, labels or [])


def boundary_chain(c: SimplicialComplex, chain: Chain) -> Chain:
    k = chain.dim
    if not 1 <= k <= c.n:
        raise BadDimension(f"boundary of a {k}-chain is undefined on a {c.n}-complex")
    masks = c.boundary_masks(k)
    out = 0
    for i in chain:
        out ^= masks[i]
    return Chain(k - 1, out)


def is_cycle(c: SimplicialComplex, chain: Chain) -> bool:
    if chain.dim == 0:
        return True
    return not boundary_chain(c, chain)


@dataclass
class PseudomanifoldReport:
    ok: bool
    violations: list

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(self.violations)


def verify_closed_pseudomanifold(c: SimplicialComplex) -> PseudomanifoldReport:
    """Check that each (n-1)-simplex has two cofaces and the top simplices are strongly connected."""
    cached = c._cache.get("pm_report")
    if cached is not None:
        return cached
    n = c.n
    violations = []
    if n == 0:
        if c.n_vertices != 1:
            violations.append(f"0-dimensional complex has {c.n_vertices} points")
        rep = PseudomanifoldReport(not violations, violations)
        c._cache["pm_report"] = rep
        return rep
    if not c.simplices[n]:
        violations.append("no top-dimensional simplices")
    for i, cof in enumerate(c.cofaces[n - 1]):
        if len(cof) != 2:
            violations.append(f"{n - 1}-simplex {[c.label(v) for v in c.simplices[n - 1][i]]} has {len(cof)} cofaces")
    for v in range(c.n_vertices):
        if not c.vertex_star(v):
            violations.append(f"vertex {c.label(v)} lies in no {n}-simplex")
    tops = c.simplices[n]
    if tops:
        seen = [False] * len(tops)
        seen[0] = True
        stack = [0]
        while stack:
            i = stack.pop()
            for f in c.faces[n][i]:
                for j in c.cofaces[n - 1][f]:
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
        missing = seen.count(False)
        if missing:
            violations.append(f"{n}-simplices not strongly connected: {missing} unreachable from {[c.label(v) for v in tops[0]]}")
    rep = PseudomanifoldReport(not violations, violations)
    c._cache["pm_report"] = rep
    return rep
