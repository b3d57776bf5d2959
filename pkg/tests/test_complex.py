import pytest
from hypothesis import given, settings, strategies as st

from homcycle.complex import Chain, boundary_chain, build_complex, is_cycle, verify_closed_pseudomanifold
from homcycle.errors import BadArity, BadDimension, DimensionMismatch, DuplicateSimplex
from homcycle.meshes import RP2_6_TRIANGLES

from conftest import ALL_MESHES, bundle

TET = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_tetrahedron_counts():
    c = build_complex(2, TET)
    assert c.f_vector() == (4, 6, 4)
    assert c.euler_characteristic() == 2


def test_rp2_counts():
    c = build_complex(2, RP2_6_TRIANGLES)
    assert c.f_vector() == (6, 15, 10)
    assert c.euler_characteristic() == 1


def test_duplicate_top_simplex():
    with pytest.raises(DuplicateSimplex):
        build_complex(2, TET + [(2, 1, 0)])


def test_bad_arity():
    with pytest.raises(BadArity):
        build_complex(2, [(0, 1, 2, 3)])
    with pytest.raises(BadArity):
        build_complex(2, [(0, 0, 1)])


def test_triangle_boundary():
    c = build_complex(2, TET)
    t = c.chain(2, [(0, 1, 2)])
    got = boundary_chain(c, t)
    assert got == c.chain(1, [(0, 1), (1, 2), (0, 2)])


def test_empty_boundary():
    c = build_complex(2, TET)
    assert boundary_chain(c, Chain(2, 0)) == Chain(1, 0)


def test_boundary_out_of_range():
    c = build_complex(2, TET)
    with pytest.raises(BadDimension):
        boundary_chain(c, Chain(0, 1))


def test_chain_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        Chain(1, 1) + Chain(2, 1)


def test_rp2_dd_zero_exhaustive():
    c = build_complex(2, RP2_6_TRIANGLES)
    for s in range(1 << c.count(2)):
        assert not boundary_chain(c, boundary_chain(c, Chain(2, s)))


@pytest.mark.parametrize("name", ALL_MESHES)
def test_dd_zero_on_generators(name):
    c = bundle(name).complex
    for k in range(2, c.n + 1):
        for i in range(c.count(k)):
            assert not boundary_chain(c, boundary_chain(c, Chain(k, 1 << i)))


def test_tetrahedron_closed():
    assert verify_closed_pseudomanifold(build_complex(2, TET)).ok


def test_single_triangle_not_closed():
    rep = verify_closed_pseudomanifold(build_complex(2, [(0, 1, 2)]))
    assert not rep.ok
    assert sum("has 1 cofaces" in v for v in rep.violations) == 3


def test_two_spheres_sharing_a_vertex():
    other = [tuple(v + 3 if v else 0 for v in t) for t in TET]
    rep = verify_closed_pseudomanifold(build_complex(2, TET + other))
    assert not rep.ok


def test_isolated_vertex_flagged():
    rep = verify_closed_pseudomanifold(build_complex(2, TET, n_vertices=5))
    assert any("lies in no" in v for v in rep.violations)


@pytest.mark.parametrize("name", ALL_MESHES)
def test_generators_are_closed(name):
    assert verify_closed_pseudomanifold(bundle(name).complex).ok


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0), st.integers(min_value=0))
def test_boundary_is_linear(a, b):
    c = bundle("torus_grid(3,3)").complex
    m = (1 << c.count(2)) - 1
    x, y = Chain(2, a & m), Chain(2, b & m)
    assert boundary_chain(c, x + y) == boundary_chain(c, x) + boundary_chain(c, y)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0))
def test_dd_zero_random_3chains(a):
    c = bundle("torus3_grid(3,3,3)").complex
    x = Chain(3, a & ((1 << c.count(3)) - 1))
    assert is_cycle(c, boundary_chain(c, x))


def test_path_chain_cancels_backtracking():
    c = build_complex(2, TET)
    assert not c.path_chain([0, 1, 0])
    assert c.path_chain([0, 1, 2, 0]) == boundary_chain(c, c.chain(2, [(0, 1, 2)]))
