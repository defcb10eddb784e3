from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

import pytest
from monolab.betti import (betti_table, is_componentwise_support_linear, is_support_linear,
                           koszul_complex, lcm_lattice, min_linear_truncation, reg, suppreg,
                           suppreg_truncation_profile, taylor_betti_table)
from monolab.complexes import SimplicialComplex, dual_ideal, reduced_homology, sr_complex
from monolab.core import MonomialIdeal, alexander_dual_ideal, support_component
from monolab.linalg import rank
from monolab.quotients import find_admissible_order, has_linear_quotients
from monolab.reports import CapExceeded

from conftest import ideal, ideals

C = SimplicialComplex
REG_SEQ = "n=4; a^2*b; c*d^2"


def test_koszul_examples():
    # x1*x2, x2 and x1 lie in <x1,x2>, 1 does not: two isolated vertices
    assert koszul_complex(ideal("n=2; x1; x2"), (1, 1)) == C(2, [{1}, {2}])
    I = ideal("n=3; x1^2*x2; x2*x3")
    assert koszul_complex(I, (2, 1, 0)) == C.empty_face(3)
    assert koszul_complex(ideal(REG_SEQ), (2, 1, 1, 2)) == C(4, [{1, 2}, {3, 4}])


def test_betti_examples():
    t = betti_table(ideal("n=2; x1; x2"))
    assert t.entries == {(0, (1, 0)): 1, (0, (0, 1)): 1, (1, (1, 1)): 1}
    t = betti_table(ideal(REG_SEQ))
    assert t.entries == {(0, (2, 1, 0, 0)): 1, (0, (0, 0, 1, 2)): 1, (1, (2, 1, 1, 2)): 1}
    t = betti_table(ideal("n=3; x1*x2; x2*x3"))
    assert t.entries == {(0, (1, 1, 0)): 1, (0, (0, 1, 1)): 1, (1, (1, 1, 1)): 1}
    assert t == taylor_betti_table(ideal("n=3; x1*x2; x2*x3"))


def test_json_triples_sorted():
    data = betti_table(ideal("n=2; x1; x2")).to_json()
    assert data == [{"i": 0, "degree": [0, 1], "rank": 1}, {"i": 0, "degree": [1, 0], "rank": 1},
                    {"i": 1, "degree": [1, 1], "rank": 1}]


def test_cap():
    with pytest.raises(CapExceeded):
        betti_table(MonomialIdeal.maximal(6), cap=5)


@given(ideals(max_gens=5))
def test_koszul_equals_taylor(I):
    assert betti_table(I) == taylor_betti_table(I)


@given(ideals(max_gens=5))
def test_table_invariants(I):
    t = betti_table(I)
    assert sum(r for (i, _), r in t.entries.items() if i == 0) == len(I.gens)
    assert all(r > 0 for r in t.entries.values())
    lattice = lcm_lattice(I)
    assert all(b in lattice for (_, b) in t.entries)
    assert suppreg(I, t) >= I.max_suppdeg


def test_suppreg_examples():
    assert suppreg(ideal(REG_SEQ)) == 3
    assert suppreg(ideal("n=3; x1^2*x2*x3")) == 3
    I = ideal("n=4; a^2*b; a*b*c; b*c*d; c*d^2")
    assert suppreg(I) == I.max_suppdeg


def test_reg_examples():
    assert reg(ideal("n=2; x1; x2")) == 1
    # the ideal is resolved as a module, so reg = deg(a^2bcd^2) - 1
    assert reg(ideal(REG_SEQ)) == 5


@given(ideals(max_gens=5))
def test_lq_regularities(I):
    if has_linear_quotients(I).holds:
        assert suppreg(I) == I.max_suppdeg
        assert reg(I) == I.max_degree


def test_support_linear_examples():
    assert not is_support_linear(ideal(REG_SEQ), 2)
    assert is_componentwise_support_linear(MonomialIdeal.maximal(3))
    assert is_support_linear(MonomialIdeal.maximal(3), 1)


@given(ideals(max_gens=5))
def test_sdi_order_gives_componentwise_support_linear(I):
    if find_admissible_order(I, "support_degree_increasing") is not None:
        assert is_componentwise_support_linear(I)


def test_truncation_examples():
    assert min_linear_truncation(MonomialIdeal.maximal(3)) == 1
    assert min_linear_truncation(ideal(REG_SEQ)) == 3
    assert suppreg_truncation_profile(ideal(REG_SEQ))[3]


@given(ideals(max_gens=5))
def test_truncation_minimum_is_suppreg(I):
    assert min_linear_truncation(I) == suppreg(I)


@given(ideals(max_gens=4))
def test_truncation_at_suppreg_is_linear(I):
    k = suppreg(I)
    if k <= I.n:
        assert is_support_linear(support_component(I, k, "at_least"), k)


def test_characteristic_sensitive_complex():
    # the six-vertex projective plane has torsion, so H_1 appears only mod 2
    rp2 = C(6, [{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5},
                {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}])
    assert reduced_homology(rp2, 0) == {}
    assert reduced_homology(rp2, 2) == {1: 1, 2: 1}


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy(rows):
    assert rank(rows) == Matrix(rows).rank()


def gf2_rank(rows):
    basis = []
    for r in rows:
        v = int("".join(str(x % 2) for x in r), 2)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_mod_two_matches_xor_basis(rows):
    assert rank(rows, 2) == gf2_rank(rows)


def test_rank_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        rank([[1]], 4)


@given(ideals(n_max=5, squarefree=True))
def test_squarefree_alexander_dual_matches_complex_route(I):
    g = (1,) * I.n
    assert alexander_dual_ideal(I, g) == dual_ideal(sr_complex(I))


@st.composite
def g_determined(draw):
    n = draw(st.integers(1, 4))
    g = tuple(draw(st.integers(1, 3)) for _ in range(n))
    gens = draw(st.lists(st.tuples(*(st.integers(0, x) for x in g)).filter(any), min_size=1, max_size=5))
    return MonomialIdeal(n, gens), g


@given(g_determined())
def test_double_alexander_dual(pair):
    I, g = pair
    assert alexander_dual_ideal(alexander_dual_ideal(I, g), g) == I
