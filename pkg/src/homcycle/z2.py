"""Dense GF(2) linear algebra on int bitsets.

A bit-vector of length ``n`` is a Python ``int`` whose bit ``j`` holds
coordinate ``j``; XOR is addition. A :class:`Z2Matrix` stores one such int per
row plus the column count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits_of(x: int):
    """Yield the set bit positions of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_bits(positions) -> int:
    v = 0
    for p in positions:
        v ^= 1 << p
    return v


@dataclass(frozen=True)
class Z2Matrix:
    rows: tuple
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise DimensionMismatch(f"row {r:#x} does not fit in {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Z2Matrix":
        return cls((0,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Z2Matrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def from_columns(cls, columns, nrows: int) -> "Z2Matrix":
        """Build from column bit-vectors (each over ``nrows`` rows)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            for i in bits_of(col):
                if i >= nrows:
                    raise DimensionMismatch(f"column {j} has bit {i} >= {nrows}")
                rows[i] |= 1 << j
        return cls(tuple(rows), len(columns))

    @classmethod
    def from_dense(cls, array) -> "Z2Matrix":
        rows = [from_bits(j for j, x in enumerate(row) if int(x) & 1) for row in array]
        ncols = len(array[0]) if len(array) else 0
        return cls(tuple(rows), ncols)

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> int:
        return from_bits(i for i, r in enumerate(self.rows) if (r >> j) & 1)

    def transpose(self) -> "Z2Matrix":
        return Z2Matrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def matvec(self, w: int) -> int:
        """Return ``m @ w`` as a bit-vector over the rows."""
        if w >> self.ncols:
            raise DimensionMismatch("vector longer than column count")
        out = 0
        for i, r in enumerate(self.rows):
            if popcount(r & w) & 1:
                out |= 1 << i
        return out


def rref(m: Z2Matrix) -> tuple[Z2Matrix, list[int], int]:
    """Reduced row echelon form.

    Pivots are taken in increasing column order; within a column the lowest
    remaining row holding a 1 is swapped up. Returns ``(reduced, pivots, rank)``.
    """
    rows = list(m.rows)
    pivots = []
    rank = 0
    for col in range(m.ncols):
        bit = 1 << col
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i] & bit:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= prow
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return Z2Matrix(tuple(rows), m.ncols), pivots, rank


def rank(m: Z2Matrix) -> int:
    return rref(m)[2]


def solve(m: Z2Matrix, b: int, length: int | None = None) -> int | None:
    """Find ``w`` with ``m @ w == b`` or return ``None`` when inconsistent.

    Free variables are set to 0, so the representative is deterministic.
    ``length`` (if given) must equal the row count.
    """
    if length is not None and length != m.nrows:
        raise DimensionMismatch(f"rhs length {length} != row count {m.nrows}")
    if b < 0 or b >> m.nrows:
        raise DimensionMismatch("rhs has bits beyond the row count")
    aug_bit = 1 << m.ncols
    aug = Z2Matrix(
        tuple(r | (aug_bit if (b >> i) & 1 else 0) for i, r in enumerate(m.rows)),
        m.ncols + 1,
    )
    red, pivots, _ = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    w = 0
    for i, col in enumerate(pivots):
        if red.rows[i] & aug_bit:
            w |= 1 << col
    return w


def kernel_basis(m: Z2Matrix) -> list[int]:
    """Null-space basis, one vector per free column in increasing order."""
    red, pivots, _ = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for i, col in enumerate(pivots):
            if (red.rows[i] >> f) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def span_rank(vectors) -> int:
    """Rank of a list of bit-vectors (treated as rows)."""
    return len(echelon(vectors))


def echelon(vectors) -> dict[int, int]:
    """Incremental echelon basis keyed by leading (highest) bit."""
    basis: dict[int, int] = {}
    for v in vectors:
        v = reduce_vector(v, basis)
        if v:
            basis[v.bit_length() - 1] = v
    return basis


def reduce_vector(v: int, basis: dict[int, int]) -> int:
    while v:
        lead = v.bit_length() - 1
        b = basis.get(lead)
        if b is None:
            return v
        v ^= b
    return 0
