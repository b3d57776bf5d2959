"""Z2 Betti numbers, homology bases and homologous-ness tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import z2
from .complex import Chain, SimplicialComplex, is_cycle
from .errors import BadDimension, IncompleteBasis, NotACycle, NotIndependent, NotSimple


@dataclass
class HomologyBasis:
    dim: int
    cycles: list = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __getitem__(self, i):
        return self.cycles[i]


def boundary_rank(c: SimplicialComplex, k: int) -> int:
    """Rank of the k-th boundary map (0 outside 1..n)."""
    if k < 1 or k > c.n:
        return 0
    key = ("bdrank", k)
    r = c._cache.get(key)
    if r is None:
        r = len(_image_echelon(c, k))
        c._cache[key] = r
    return r


def _image_echelon(c: SimplicialComplex, k: int) -> dict:
    """Echelon basis of the image of the k-th boundary map, as (k-1)-chain masks."""
    key = ("img", k)
    e = c._cache.get(key)
    if e is None:
        e = z2.echelon(c.boundary_masks(k)) if 1 <= k <= c.n else {}
        c._cache[key] = e
    return e


def betti_z2(c: SimplicialComplex, k: int) -> int:
    if not 0 <= k <= c.n:
        raise BadDimension(f"k must lie in 0..{c.n}, got {k}")
    return c.count(k) - boundary_rank(c, k) - boundary_rank(c, k + 1)


def betti_numbers(c: SimplicialComplex) -> tuple:
    return tuple(betti_z2(c, k) for k in range(c.n + 1))


def _check_cycle(c, z: Chain, dim: int | None = None):
    if dim is not None and z.dim != dim:
        raise NotACycle(f"expected a {dim}-chain, got a {z.dim}-chain")
    if not is_cycle(c, z):
        raise NotACycle(f"{z.dim}-chain has nonempty boundary")


def is_null_homologous(c: SimplicialComplex, z: Chain) -> bool:
    """True iff ``z`` is the boundary of some (k+1)-chain."""
    _check_cycle(c, z)
    k = z.dim
    if k >= c.n:
        return not z
    return z2.solve(c.boundary_matrix(k + 1), z.bits) is not None


def is_homologous(c: SimplicialComplex, x: Chain, y: Chain) -> bool:
    return is_null_homologous(c, x + y)


def homology_basis(c: SimplicialComplex, k: int) -> HomologyBasis:
    """Cycles spanning H_k by matrix reduction.

    Candidates are the kernel basis of the k-th boundary map (free-column
    order); each is kept when it is independent of the boundaries and of the
    cycles already kept. For k=1 the candidates are the fundamental cycles of
    the pivot spanning forest, hence embedded loops.
    """
    if not 0 <= k <= c.n:
        raise BadDimension(f"k must lie in 0..{c.n}, got {k}")
    if k == 0:
        candidates = [1 << v for v in range(c.n_vertices)]
    else:
        candidates = z2.kernel_basis(c.boundary_matrix(k))
    basis = dict(_image_echelon(c, k + 1))
    kept = []
    target = betti_z2(c, k)
    for v in candidates:
        if len(kept) == target:
            break
        red = z2.reduce_vector(v, basis)
        if red:
            basis[red.bit_length() - 1] = red
            kept.append(Chain(k, v))
    return HomologyBasis(k, kept)


def independent_mod_boundaries(c: SimplicialComplex, cycles) -> bool:
    """True iff no nonzero combination of ``cycles`` is a boundary."""
    cycles = list(cycles)
    if not cycles:
        return True
    k = cycles[0].dim
    basis = dict(_image_echelon(c, k + 1))
    for z in cycles:
        red = z2.reduce_vector(z.bits, basis)
        if not red:
            return False
        basis[red.bit_length() - 1] = red
    return True


def is_simple_cycle(c: SimplicialComplex, z: Chain) -> bool:
    """Connected closed pseudomanifold test for an (n-1)-cycle.

    Every (n-2)-face of the cycle must lie in exactly two of its simplices and
    the simplices must be connected through those faces.
    """
    _check_cycle(c, z)
    members = z.indices
    if not members:
        return False
    k = z.dim
    if k == 0:
        return len(members) == 1
    faces = c.faces[k]
    counts = Counter(f for i in members for f in faces[i])
    if any(m != 2 for m in counts.values()):
        return False
    by_face: dict = {}
    for i in members:
        for f in faces[i]:
            by_face.setdefault(f, []).append(i)
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        i = stack.pop()
        for f in faces[i]:
            for j in by_face[f]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
    return len(seen) == len(members)


def _validate_basis(c, cycles, k, check_simple=True):
    for i, z in enumerate(cycles):
        try:
            _check_cycle(c, z, k)
        except NotACycle as exc:
            raise NotACycle(f"basis cycle {i}: {exc}") from None
    if not independent_mod_boundaries(c, cycles):
        raise NotIndependent("some nonzero combination of the cycles is a boundary")
    r = betti_z2(c, k)
    if len(cycles) != r:
        raise IncompleteBasis(f"{len(cycles)} cycles supplied but rank H_{k} is {r}")
    if check_simple:
        for i, z in enumerate(cycles):
            if not is_simple_cycle(c, z):
                raise NotSimple(f"basis cycle {i} is not simple")


def hn1_basis(c: SimplicialComplex, supplied=None) -> HomologyBasis:
    """Basis of H_{n-1} by simple cycles, either validated or computed."""
    k = c.n - 1
    if k < 0:
        raise BadDimension("a 0-dimensional complex has no (n-1)-homology")
    if supplied is not None:
        cycles = list(supplied)
        _validate_basis(c, cycles, k)
        return HomologyBasis(k, cycles)
    basis = homology_basis(c, k)
    for i, z in enumerate(basis.cycles):
        if not is_simple_cycle(c, z):
            raise NotSimple(
                f"matrix-derived basis cycle {i} is not simple; supply a basis of simple cycles"
            )
    return basis


def h1_basis(c: SimplicialComplex, supplied=None) -> HomologyBasis:
    """Basis of H_1; supplied cycles are validated but need not be simple."""
    if supplied is not None:
        cycles = list(supplied)
        _validate_basis(c, cycles, 1, check_simple=False)
        return HomologyBasis(1, cycles)
    return homology_basis(c, 1)

