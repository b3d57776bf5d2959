import json
import random

import jsonschema
import pytest

from homcycle import z2
from homcycle.complex import Chain, boundary_chain, build_complex
from homcycle.errors import BadDimension, NonManifold, NotACycle, NotSimple, NotSimpleBasis
from homcycle.homology import is_null_homologous
from homcycle.index import build_index_function, index_of_chain, parse_sheet, sheet_bits, single_cycle_index
from homcycle.schemas import load_schema

from conftest import ALL_MESHES, SURFACES, bundle, random_cycle, table


def loop(c, verts):
    return c.path_chain(list(verts) + [verts[0]])


def test_sphere_table_is_trivial():
    t = table("sphere_tet")
    assert t.r == 0
    assert all(g == 0 for g in t.J)


def test_rp2_generator_has_index_one():
    b = bundle("rp2_6")
    t = table("rp2_6")
    assert index_of_chain(t, b.h1[0]) == 1
    c = b.complex
    for i in range(c.count(2)):
        assert index_of_chain(t, boundary_chain(c, Chain(2, 1 << i))) == 0


def test_torus_meridian_longitude_indices():
    b = bundle("torus_grid(3,3)")
    t = table("torus_grid(3,3)")
    mer, lon = b.hn1
    assert index_of_chain(t, mer) == 0b10
    assert index_of_chain(t, lon) == 0b01
    m = z2.Z2Matrix.from_dense([[(index_of_chain(t, h) >> k) & 1 for k in range(2)] for h in b.h1])
    assert z2.rank(m) == 2


def test_empty_chain_index():
    assert index_of_chain(table("genus2_polygon"), Chain(1, 0)) == 0


@pytest.mark.parametrize("name", ALL_MESHES)
def test_boundaries_have_zero_index(name):
    c = bundle(name).complex
    t = table(name)
    for a, b, d in c.simplices[2]:
        assert t.J[c.edge_id(a, b)] ^ t.J[c.edge_id(b, d)] ^ t.J[c.edge_id(a, d)] == 0


@pytest.mark.parametrize("name", ALL_MESHES)
def test_h1_index_matrix_invertible(name):
    b = bundle(name)
    t = table(name)
    rows = [index_of_chain(t, h) for h in b.h1]
    assert len(rows) == t.r
    assert z2.span_rank(rows) == t.r


@pytest.mark.parametrize("name", ALL_MESHES)
def test_table_invariants(name):
    b = bundle(name)
    c = b.complex
    t = table(name)
    ridges = c.simplices[c.n - 1]
    for k, (z, p) in enumerate(zip(b.hn1, t.passes)):
        # coordinate k of J is exactly the plane M_k
        assert p.plane == sum(1 << e for e, g in enumerate(t.J) if (g >> k) & 1)
        zverts = {v for i in z for v in ridges[i]}
        assert set(p.local_side) == zverts
        for u in zverts:
            assert p.local_side[u]
            # mu discipline: never cross the cycle, never cross a face twice
            crossed = p.crossed[u]
            assert len(crossed) == len(set(crossed))
            assert not set(crossed) & set(z)
            assert all(u in ridges[f] for f in crossed)


@pytest.mark.parametrize("name", SURFACES[1:] + ["torus3_grid(3,3,3)"])
def test_index_detects_homology(name):
    c = bundle(name).complex
    t = table(name)
    rng = random.Random(7)
    for _ in range(60):
        x, y = random_cycle(c, rng), random_cycle(c, rng)
        assert (index_of_chain(t, x) == index_of_chain(t, y)) == is_null_homologous(c, x + y)


def test_deterministic_tables():
    b = bundle("klein_grid(4,4)")
    t1 = build_index_function(b.complex, b.hn1)
    t2 = build_index_function(b.complex, b.hn1, jobs=4)
    assert t1.J == t2.J
    assert t1.to_json(b.complex) == t2.to_json(b.complex)
    for p, q in zip(t1.passes, t2.passes):
        assert p.local_edges == q.local_edges
        assert p.local_side == q.local_side


def test_single_cycle_index_examples():
    rp = bundle("rp2_6")
    z = rp.hn1[0]
    assert single_cycle_index(rp.complex, z, z) == 1
    assert single_cycle_index(rp.complex, z, boundary_chain(rp.complex, Chain(2, 1))) == 0
    c = bundle("torus_grid(3,3)").complex
    assert single_cycle_index(c, loop(c, (0, 1, 2)), loop(c, (3, 4, 5))) == 0
    assert single_cycle_index(c, loop(c, (0, 1, 2)), loop(c, (0, 3, 6))) == 1


def test_single_cycle_index_errors():
    c = bundle("torus_grid(3,3)").complex
    with pytest.raises(NotACycle):
        single_cycle_index(c, loop(c, (0, 1, 2)), c.path_chain([0, 1]))
    with pytest.raises(NotSimple):
        single_cycle_index(c, loop(c, (0, 1, 2)) + loop(c, (3, 4, 5)), loop(c, (0, 3, 6)))


def test_build_rejects_bad_inputs():
    c = bundle("torus_grid(3,3)").complex
    with pytest.raises(NotSimpleBasis):
        build_index_function(c, [loop(c, (0, 1, 2)) + loop(c, (0, 3, 6))])
    with pytest.raises(NotSimpleBasis):
        build_index_function(c, [c.path_chain([0, 1, 2])])
    tri = build_complex(2, [(0, 1, 2)])
    with pytest.raises(NonManifold):
        build_index_function(tri, [])
    curve = build_complex(1, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(BadDimension):
        build_index_function(curve, [])


def test_sheet_bits_round_trip():
    for r in range(5):
        for g in range(1 << r):
            assert parse_sheet(sheet_bits(g, r)) == g
    assert sheet_bits(0b01, 2) == "10"


def test_json_dump_schema():
    b = bundle("genus2_polygon")
    doc = json.loads(table("genus2_polygon").to_json(b.complex))
    jsonschema.validate(doc, load_schema("index"))
    assert doc["r"] == 4
    assert len(doc["J"]) == b.complex.count(1)
