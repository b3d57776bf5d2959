"""Text formats: smesh meshes, chain files, weight files and result JSON.

smesh::

    # comment
    dim 2
    vertices 6
    0 1 2
    ...

Vertex labels are arbitrary tokens. They are remapped to dense ids in sorted
order (numeric order when every label is an integer), and the complex keeps the
labels for output.

Chain files list one simplex per line as vertex labels. Blank lines separate
blocks: a basis file holds one cycle per block, while reading a file as a
single chain sums every line mod 2.

Weight files hold ``u v weight`` lines; unlisted edges weigh 1.0.
"""

from __future__ import annotations

import json
import math

from .complex import Chain, SimplicialComplex, build_complex, verify_closed_pseudomanifold
from .errors import BadArity, DuplicateSimplex, NonManifold, ParseError
from .index import sheet_bits
from .mincycle import MinCycleResult, WeightFunction


def _lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        yield no, raw.split("#", 1)[0].strip()


def _label_value(tok: str):
    try:
        return int(tok)
    except ValueError:
        return tok


def parse_mesh(text: str, allow_open: bool = False) -> SimplicialComplex:
    n = nverts = None
    rows = []
    for no, line in _lines(text):
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "dim":
                raise ParseError("expected 'dim <n>'", line=no)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", line=no) from None
            if n < 1:
                raise ParseError(f"dimension must be >= 1, got {n}", line=no)
            continue
        if nverts is None:
            if len(parts) != 2 or parts[0] != "vertices":
                raise ParseError("expected 'vertices <N>'", line=no)
            try:
                nverts = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", line=no) from None
            continue
        if len(parts) != n + 1:
            raise BadArity(f"expected {n + 1} labels, got {len(parts)}", line=no)
        if len(set(parts)) != len(parts):
            raise BadArity(f"repeated label in {parts}", line=no)
        rows.append((no, parts))
    if n is None or nverts is None:
        raise ParseError("missing 'dim' or 'vertices' header")

    tokens = sorted({tok for _, parts in rows for tok in parts})
    values = [_label_value(tok) for tok in tokens]
    if all(isinstance(v, int) for v in values):
        labels = sorted(values)
    else:
        labels = tokens
    if len(labels) != nverts:
        raise ParseError(f"header says {nverts} vertices but {len(labels)} labels are used")
    ids = {str(lab): i for i, lab in enumerate(labels)}
    if len(ids) != len(labels):
        raise ParseError("labels collide after normalization (e.g. '01' and '1')")

    top = []
    seen = {}
    for no, parts in rows:
        key = tuple(sorted(ids[str(_label_value(p))] for p in parts))
        if key in seen:
            raise DuplicateSimplex(f"simplex repeats line {seen[key]}", line=no)
        seen[key] = no
        top.append(key)
    c = build_complex(n, top, n_vertices=len(labels), labels=labels)
    if not allow_open:
        rep = verify_closed_pseudomanifold(c)
        if not rep.ok:
            raise NonManifold(rep.violations[0])
    return c


def serialize_mesh(c: SimplicialComplex) -> str:
    out = [f"dim {c.n}", f"vertices {c.n_vertices}"]
    for s in c.simplices[c.n]:
        out.append(" ".join(str(c.label(v)) for v in s))
    return "\n".join(out) + "\n"


def label_ids(c: SimplicialComplex) -> dict:
    return {str(c.label(v)): v for v in range(c.n_vertices)}


def _simplex_lines(text, c):
    ids = label_ids(c)
    block = []
    blocks = [block]
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            # comment-only lines do not end a block
            if not raw.strip() and block:
                block = []
                blocks.append(block)
            continue
        verts = []
        for tok in line.split():
            if tok not in ids:
                raise ParseError(f"unknown vertex label {tok!r}", line=no)
            verts.append(ids[tok])
        block.append((no, tuple(sorted(verts))))
    return [b for b in blocks if b]


def _block_chain(c, block, dim):
    bits = 0
    for no, key in block:
        k = len(key) - 1
        if k != dim:
            raise ParseError(f"expected a {dim}-simplex, got {len(key)} labels", line=no)
        if not 0 <= k <= c.n or key not in c.index[k]:
            raise ParseError(f"{list(key)} is not a simplex of the mesh", line=no)
        bits ^= 1 << c.index[k][key]
    return Chain(dim, bits)


def parse_chain_blocks(text: str, c: SimplicialComplex, dim: int | None = None) -> list:
    blocks = _simplex_lines(text, c)
    if dim is None:
        if not blocks:
            return []
        dim = len(blocks[0][0][1]) - 1
    return [_block_chain(c, b, dim) for b in blocks]


def parse_chain(text: str, c: SimplicialComplex, dim: int | None = None) -> Chain:
    """Read a chain file as one chain (all lines summed mod 2)."""
    blocks = _simplex_lines(text, c)
    lines = [item for b in blocks for item in b]
    if dim is None:
        dim = len(lines[0][1]) - 1 if lines else 1
    return _block_chain(c, lines, dim)


def serialize_chain(c: SimplicialComplex, chain: Chain) -> str:
    return "".join(
        " ".join(str(c.label(v)) for v in s) + "\n" for s in c.chain_simplices(chain)
    )


def serialize_chain_blocks(c: SimplicialComplex, chains) -> str:
    return "\n".join(serialize_chain(c, z) for z in chains)


def parse_weights(text: str, c: SimplicialComplex, default: float = 1.0) -> WeightFunction:
    ids = label_ids(c)
    weights = [default] * c.count(1)
    given = {}
    for no, line in _lines(text):
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError("expected 'u v weight'", line=no)
        u, v, w = parts
        if u not in ids or v not in ids:
            raise ParseError(f"unknown vertex label in {u!r} {v!r}", line=no)
        try:
            e = c.edge_id(ids[u], ids[v])
        except KeyError:
            raise ParseError(f"{u}-{v} is not an edge", line=no) from None
        try:
            value = float(w)
        except ValueError:
            raise ParseError(f"bad weight {w!r}", line=no) from None
        if not value >= 0 or math.isinf(value):
            raise ParseError(f"weight must be finite and nonnegative, got {w}", line=no)
        if e in given:
            raise ParseError(f"edge {u}-{v} already weighted on line {given[e]}", line=no)
        given[e] = no
        weights[e] = value
    return WeightFunction(weights)


def number(x: float):
    """Integral floats become ints so unit-weight output reads ``3`` rather than ``3.0``."""
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def result_to_dict(c: SimplicialComplex, res: MinCycleResult) -> dict:
    return {
        "class_index": sheet_bits(res.class_index, res.r),
        "weight": number(res.weight),
        "path_weight": number(res.path_weight),
        "edges": [[c.label(a), c.label(b)] for a, b in c.chain_simplices(res.cycle)],
        "witness": [[c.label(v), sheet_bits(g, res.r)] for v, g in res.witness],
    }


def result_to_json(c: SimplicialComplex, res: MinCycleResult) -> str:
    return json.dumps(result_to_dict(c, res), indent=2)
