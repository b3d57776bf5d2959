import itertools

import pytest

from homcycle.complex import Chain, boundary_chain
from homcycle.errors import BadDimension, IncompleteBasis, NotACycle, NotIndependent, NotSimple
from homcycle.homology import (
    betti_numbers,
    betti_z2,
    h1_basis,
    hn1_basis,
    homology_basis,
    independent_mod_boundaries,
    is_homologous,
    is_null_homologous,
    is_simple_cycle,
)

from conftest import ALL_MESHES, bundle, random_cycle


def loop(c, verts):
    return c.path_chain(list(verts) + [verts[0]])


@pytest.mark.parametrize(
    "name, expected",
    [
        ("sphere_tet", (1, 0, 1)),
        ("rp2_6", (1, 1, 1)),
        ("torus_grid(3,3)", (1, 2, 1)),
        ("klein_grid(4,4)", (1, 2, 1)),
        ("genus2_polygon", (1, 4, 1)),
        ("torus3_grid(3,3,3)", (1, 3, 3, 1)),
    ],
)
def test_betti_numbers(name, expected):
    assert betti_numbers(bundle(name).complex) == expected


def test_betti_k_out_of_range():
    with pytest.raises(BadDimension):
        betti_z2(bundle("rp2_6").complex, 3)


@pytest.mark.parametrize("name", ALL_MESHES)
def test_euler_and_duality(name):
    c = bundle(name).complex
    b = betti_numbers(c)
    assert sum((-1) ** k * x for k, x in enumerate(b)) == c.euler_characteristic()
    assert b[1] == b[c.n - 1]


def test_rp2_supplied_loop_accepted():
    b = bundle("rp2_6")
    basis = hn1_basis(b.complex, [loop(b.complex, (0, 1, 3))])
    assert basis.rank == 1


def test_torus_meridian_longitude():
    c = bundle("torus_grid(3,3)").complex
    mer, lon = loop(c, (0, 1, 2)), loop(c, (0, 3, 6))
    basis = hn1_basis(c, [mer, lon])
    assert basis.rank == 2
    for z in (mer, lon, mer + lon):
        assert not is_null_homologous(c, z)


def test_sphere_has_empty_basis():
    assert hn1_basis(bundle("sphere_tet").complex).rank == 0


def test_supplied_basis_errors():
    c = bundle("torus_grid(3,3)").complex
    mer = loop(c, (0, 1, 2))
    with pytest.raises(IncompleteBasis):
        hn1_basis(c, [mer])
    with pytest.raises(NotIndependent):
        hn1_basis(c, [mer, loop(c, (3, 4, 5))])
    with pytest.raises(NotACycle):
        hn1_basis(c, [c.path_chain([0, 1, 2]), mer])
    eight = mer + loop(c, (0, 3, 6))
    with pytest.raises(NotSimple):
        hn1_basis(c, [eight, mer])
    # h1 does not care about simplicity
    assert h1_basis(c, [eight, mer]).rank == 2


def test_simple_cycle_examples():
    rp = bundle("rp2_6").complex
    assert is_simple_cycle(rp, loop(rp, (0, 1, 3)))
    c = bundle("torus_grid(3,3)").complex
    two = loop(c, (0, 1, 2)) + loop(c, (3, 4, 5))
    assert not is_simple_cycle(c, two)
    eight = loop(c, (0, 1, 2)) + loop(c, (0, 3, 6))
    degree0 = sum(1 for a, b in c.chain_simplices(eight) if 0 in (a, b))
    assert degree0 == 4
    assert not is_simple_cycle(c, eight)
    assert not is_simple_cycle(c, Chain(1, 0))


def test_null_homologous_examples():
    b = bundle("rp2_6")
    c = b.complex
    for i in range(c.count(2)):
        assert is_null_homologous(c, boundary_chain(c, Chain(2, 1 << i)))
    assert not is_null_homologous(c, b.h1[0])
    assert is_null_homologous(c, Chain(1, 0))
    with pytest.raises(NotACycle):
        is_null_homologous(c, c.path_chain([0, 1]))


@pytest.mark.parametrize("name", ALL_MESHES)
def test_curated_bases_nontrivial_combinations(name):
    b = bundle(name)
    c = b.complex
    for basis in (b.hn1, b.h1):
        cycles = list(basis)
        for coeffs in itertools.product((0, 1), repeat=len(cycles)):
            if not any(coeffs):
                continue
            z = Chain(basis.dim, 0)
            for a, cyc in zip(coeffs, cycles):
                if a:
                    z = z + cyc
            assert not is_null_homologous(c, z) if basis.dim == 1 else independent_mod_boundaries(c, [z])


@pytest.mark.parametrize("name", ALL_MESHES)
def test_matrix_bases_have_full_rank(name):
    c = bundle(name).complex
    for k in range(c.n + 1):
        hb = homology_basis(c, k)
        assert hb.rank == betti_z2(c, k)
        assert independent_mod_boundaries(c, hb.cycles)


def test_homologous_random_pairs(rng):
    c = bundle("klein_grid(4,4)").complex
    masks = c.boundary_masks(2)
    for _ in range(50):
        x = random_cycle(c, rng)
        y = x
        for _ in range(rng.randint(0, 5)):
            y = y + Chain(1, masks[rng.randrange(len(masks))])
        assert is_homologous(c, x, y)
