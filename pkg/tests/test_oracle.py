import random

import pytest
from hypothesis import given, settings, strategies as st

from homcycle import z2
from homcycle.complex import Chain, boundary_chain
from homcycle.errors import BadDimension, BudgetExceeded, NotACycle
from homcycle.homology import is_null_homologous
from homcycle.index import index_of_chain
from homcycle.mincycle import WeightFunction
from homcycle.oracle import (
    brute_min_in_class,
    coset_min,
    cup_form_invariants,
    cup_product_matrix,
    elimination_min_in_class,
    form_invariants,
)

from conftest import SURFACES, bundle, random_cycle, table


def test_boundary_class_is_zero():
    c = bundle("rp2_6").complex
    res = brute_min_in_class(c, WeightFunction.unit(c), boundary_chain(c, Chain(2, 0b11)))
    assert res.weight == 0
    assert not res.chain


def test_rp2_golden():
    b = bundle("rp2_6")
    res = brute_min_in_class(b.complex, WeightFunction.unit(b.complex), b.h1[0])
    assert res.weight == 3
    assert res.coset_log2 == 9


def test_torus_meridian_golden():
    b = bundle("torus_grid(3,3)")
    res = brute_min_in_class(b.complex, WeightFunction.unit(b.complex), b.hn1[0])
    assert res.weight == 3
    assert res.coset_log2 == 17


def test_budget_exceeded():
    b = bundle("klein_grid(4,4)")
    with pytest.raises(BudgetExceeded):
        brute_min_in_class(b.complex, WeightFunction.unit(b.complex), b.h1[0])
    assert coset_min(b.complex, WeightFunction.unit(b.complex), b.h1[0]).method == "elimination"


def test_oracle_rejects_non_cycles():
    c = bundle("rp2_6").complex
    with pytest.raises(NotACycle):
        brute_min_in_class(c, WeightFunction.unit(c), c.path_chain([0, 1]))


def test_lex_tie_break():
    # every weight zero: the whole coset ties and the empty-first order wins
    b = bundle("rp2_6")
    c = b.complex
    res = brute_min_in_class(c, WeightFunction([0.0] * c.count(1)), b.h1[0])
    coset = []
    basis = list(z2.echelon(c.boundary_masks(2)).values())
    for s in range(1 << len(basis)):
        y = b.h1[0].bits
        for i in z2.bits_of(s):
            y ^= basis[i]
        coset.append(y)
    key = lambda y: [(y >> e) & 1 for e in range(c.count(1))]
    assert res.chain.bits == min(coset, key=key)


@pytest.mark.parametrize("name", ["rp2_6", "torus_grid(3,3)"])
def test_elimination_agrees_with_enumeration(name):
    c = bundle(name).complex
    rng = random.Random(4)
    for _ in range(6):
        L = WeightFunction([rng.choice([rng.random(), 1.0, 0.0]) for _ in range(c.count(1))])
        x = random_cycle(c, rng)
        a = brute_min_in_class(c, L, x)
        e = elimination_min_in_class(c, L, x)
        assert a.exact == e.exact
        assert is_null_homologous(c, e.chain + x)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 14), st.floats(0.0, 5.0), st.integers(0, 2**32))
def test_monotone_in_one_edge(edge, bump, seed):
    b = bundle("rp2_6")
    c = b.complex
    rng = random.Random(seed)
    w = [rng.random() for _ in range(c.count(1))]
    before = brute_min_in_class(c, WeightFunction(w), b.h1[0]).weight
    w[edge] += bump
    after = brute_min_in_class(c, WeightFunction(w), b.h1[0]).weight
    assert after >= before


def test_cup_form_examples():
    assert cup_form_invariants(bundle("sphere_tet").complex) == (0, False)
    assert cup_form_invariants(bundle("rp2_6").complex) == (1, True)
    assert cup_form_invariants(bundle("torus_grid(3,3)").complex) == (2, False)
    assert cup_form_invariants(bundle("klein_grid(4,4)").complex) == (2, True)
    assert cup_form_invariants(bundle("genus2_polygon").complex) == (4, False)


def test_cup_form_is_symmetric():
    for name in SURFACES:
        q = cup_product_matrix(bundle(name).complex)
        assert q == [list(row) for row in zip(*q)]


def test_cup_form_needs_surface():
    with pytest.raises(BadDimension):
        cup_form_invariants(bundle("torus3_grid(3,3,3)").complex)


def test_form_invariants_small():
    assert form_invariants([]) == (0, False)
    assert form_invariants([[0, 1], [1, 0]]) == (2, False)
    assert form_invariants([[1, 1], [1, 0]]) == (2, True)


@pytest.mark.parametrize("name", SURFACES)
def test_cup_form_matches_index_form(name):
    b = bundle(name)
    t = table(name)
    induced = [[(index_of_chain(t, z) >> k) & 1 for k in range(t.r)] for z in b.hn1]
    assert cup_form_invariants(b.complex) == form_invariants(induced)
