from itertools import permutations

import pytest
from hypothesis import given

from monolab.core import MonomialIdeal, colon_principal, ideal_wedge
from monolab.io import parse_monomial
from monolab.quotients import (GeneratorOrder, admissibility_certificate, brute_force_orders,
                               componentwise_lq, find_admissible_order, has_linear_quotients,
                               is_admissible_order, is_admissible_sequence, is_popescu_order,
                               is_support_degree_increasing, pack_compatibility,
                               verify_certificate, wedge_order_construction)
from monolab.reports import CapExceeded, Verdict

from conftest import ideal, ideals


def order_of(I, text):
    return GeneratorOrder.from_monomials(I, [parse_monomial(t.strip(), I.n) for t in text.split(";")])


def test_given_orders_admissible(four_gens, seven_gens):
    assert is_admissible_order(order_of(four_gens, "a^2*b; a*b*c; b*c*d; c*d^2")).holds
    assert is_admissible_order(order_of(seven_gens, "b*c; a*b*d^2; b^3*d^2; c*d; a*c; c^2; a^2*b*d")).holds


def test_two_mixed_generators_fail_both_orders():
    I = ideal("n=4; a^2*b; c*d^2")
    for seq in [(0, 1), (1, 0)]:
        rep = is_admissible_order(GeneratorOrder(I, seq))
        assert rep.fails and rep.witness["position"] == 2


def test_single_generator_holds():
    assert is_admissible_order(GeneratorOrder(ideal("n=2; x1^2*x2"), (0,))).holds


def test_find_order_examples(four_gens, seven_gens):
    assert find_admissible_order(four_gens) is not None
    assert find_admissible_order(four_gens, "support_degree_increasing") is None
    assert find_admissible_order(seven_gens, "support_degree_increasing") is None
    I = ideal("n=2; x1; x2")
    for c in ("none", "degree_increasing", "support_degree_increasing"):
        assert [str(m) for m in find_admissible_order(I, c).monomials] == ["x1", "x2"]


def test_cap_gives_unknown():
    I = MonomialIdeal.maximal(5)
    with pytest.raises(CapExceeded):
        find_admissible_order(I, cap=4)
    assert has_linear_quotients(I, cap=4).verdict is Verdict.UNKNOWN


@given(ideals(max_gens=6))
def test_search_agrees_with_brute_force(I):
    found = find_admissible_order(I)
    brute = brute_force_orders(I)
    assert (found is not None) == bool(brute)
    if found is not None:
        assert tuple(found.monomials) in brute


@given(ideals(max_gens=5))
def test_constrained_search_agrees_with_brute_force(I):
    brute = brute_force_orders(I)
    sdi = [o for o in brute if is_support_degree_increasing(o)]
    di = [o for o in brute if all(a.degree <= b.degree for a, b in zip(o, o[1:]))]
    assert (find_admissible_order(I, "support_degree_increasing") is not None) == bool(sdi)
    assert (find_admissible_order(I, "degree_increasing") is not None) == bool(di)
    # linear quotients always come with a degree-increasing admissible order
    assert bool(brute) == bool(di)


def test_admissible_means_linear_colons_by_enumeration():
    # independent oracle: the colon of each prefix is generated in degree one
    I = ideal("n=4; b*c; a*b*d^2; b^3*d^2; c*d; a*c; c^2; a^2*b*d")
    for perm in list(permutations(I.gens))[:400]:
        colons_linear = True
        for j in range(1, len(perm)):
            quots = [colon_principal(perm[i], perm[j]) for i in range(j)]
            minimal = [q for q in quots if not any(p.divides(q) and p != q for p in quots)]
            if any(q.degree != 1 for q in minimal):
                colons_linear = False
                break
        assert colons_linear == is_admissible_sequence(perm)


@given(ideals(max_gens=5))
def test_certificates_reverify(I):
    order = find_admissible_order(I)
    if order is None:
        return
    cert = admissibility_certificate(order.monomials)
    assert cert is not None and verify_certificate(order.monomials, cert)
    for (i, j, k, d) in cert:
        mons = order.monomials
        assert colon_principal(mons[k - 1], mons[j - 1]).exps == tuple(
            int(t == d) for t in range(1, I.n + 1))


def test_popescu_examples():
    I = ideal("n=3; x1; x2")
    assert is_popescu_order(find_admissible_order(I, "support_degree_increasing")).holds
    A = ideal("n=4; a^2*b; c*d^2")
    for seq in [(0, 1), (1, 0)]:
        rep = is_popescu_order(GeneratorOrder(A, seq))
        assert rep.fails and rep.witness["condition"] == "b"


@given(ideals(max_gens=5))
def test_sdi_orders_are_popescu(I):
    order = find_admissible_order(I, "support_degree_increasing")
    if order is not None:
        assert is_popescu_order(order).holds


@given(ideals(max_gens=5, squarefree=True))
def test_squarefree_admissible_orders_are_weak_popescu(I):
    order = find_admissible_order(I)
    if order is not None:
        assert is_popescu_order(order, weak=True).holds


def test_wedge_order_examples():
    I = ideal("n=3; x1; x2")
    out = wedge_order_construction(I, GeneratorOrder(I, (0, 1)))
    assert [str(m) for m in out.monomials] == ["x1*x2", "x1*x3", "x2*x3"]
    J = ideal("n=3; x1*x2")
    assert [str(m) for m in wedge_order_construction(J, GeneratorOrder(J, (0,))).monomials] == ["x1*x2*x3"]
    K = ideal("n=3; x1*x2; x2^3")
    for seq in [(0, 1), (1, 0)]:
        with pytest.raises(ValueError):
            wedge_order_construction(K, GeneratorOrder(K, seq))


@given(ideals(max_gens=5))
def test_wedge_order_is_admissible_and_minimal(I):
    order = find_admissible_order(I, "support_degree_increasing")
    if order is None:
        return
    out = wedge_order_construction(I, order)
    assert out.ideal == ideal_wedge(I, MonomialIdeal.maximal(I.n))
    assert is_admissible_order(out).holds
    assert is_support_degree_increasing(out.monomials)


def test_componentwise_examples(four_gens, seven_gens):
    reps = componentwise_lq(four_gens, "support")
    assert reps[2].fails
    reps = componentwise_lq(seven_gens, "support")
    assert {1, 2, 3} <= set(reps) and all(r.holds for r in reps.values())


def test_pack_example():
    I = ideal("n=3; x2^4; x1*x2^3; x2^3*x3; x1^2*x2*x3")
    assert all(r.holds for r in componentwise_lq(I, "support").values())
    assert find_admissible_order(I) is None
    assert pack_compatibility(I).fails


def test_pack_variables_hold():
    rep = pack_compatibility(MonomialIdeal.maximal(3))
    assert rep.holds
    assert is_admissible_order(rep.certificate["induced_order"]).holds


def test_pack_needs_wedge_generators_minimal():
    # G(I<1> ∧ m) lies outside G(I<2>), so no family can start with it
    I = ideal("n=4; x1*x4; x2*x4; x1*x2^2; x2^3; x2^2*x3")
    rep = pack_compatibility(I)
    assert rep.fails and rep.witness["component"] == 2
    assert find_admissible_order(I, "support_degree_increasing") is None


@given(ideals(max_gens=6, squarefree=True))
def test_squarefree_lq_is_pack_compatible(I):
    if find_admissible_order(I) is not None:
        assert pack_compatibility(I).holds


@given(ideals(max_gens=6))
def test_pack_gives_admissible_induced_order(I):
    rep = pack_compatibility(I)
    if rep.holds:
        order = rep.certificate["induced_order"]
        assert is_admissible_order(order).holds
        assert is_support_degree_increasing(order.monomials)


def test_generator_order_rejects_non_permutations():
    I = ideal("n=2; x1; x2")
    with pytest.raises(ValueError):
        GeneratorOrder(I, (0, 0))
