"""Hypotheses, ideal closures, simplicity verdicts, fine decomposition."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

import lierinehart as lr
from lierinehart import Functional, span, vec
from lierinehart.fixtures import _instance
from lierinehart.simple import opposite_half_ideal

Q = Fraction
F = Functional.of


def toy_two_roots():
    """L = span{h, e, f} with [h,e] = e, [h,f] = -f, [e,f] = 0 over A = Q.

    Valid, maximal length, zero center, but not tight: span{e} and span{f}
    are one-sided proper ideals, so the simple/split dichotomy genuinely
    fails (its tightness hypothesis does not hold).
    """
    bracket = [(0, 1, 1, 1), (1, 0, 1, -1), (0, 2, 2, -1), (2, 0, 2, 1)]
    action = [(0, j, j, 1) for j in range(3)]
    return _instance(
        "TOY2", 1, [([0], 1), ([1], 1), ([-1], 1)], [([0], 1)],
        bracket, [(0, 0, 0, 1)], action, [],
    )


# -- hypotheses -------------------------------------------------------------------


def test_hypotheses_sl2(sl2):
    h = lr.check_hypotheses(sl2)
    assert h.symmetric_roots and h.symmetric_weights
    assert h.maximal_length and h.root_multiplicative
    assert h.all_roots_connected and h.all_weights_connected


def test_hypotheses_gl2n(gl2n):
    h = lr.check_hypotheses(gl2n)
    assert h.symmetric_roots
    assert not h.symmetric_weights  # {(1,0),(0,1)} is not closed under negation
    assert h.root_multiplicative  # vacuous: no sums land back in the systems
    assert h.maximal_length


def test_hypotheses_trunc4(trunc4):
    h = lr.check_hypotheses(trunc4)
    assert not h.symmetric_roots
    assert not h.root_multiplicative  # 1+1=2 is a root but [L_1, L_1] = 0


# -- ideal closures ----------------------------------------------------------------


def test_closure_sl2_whole_algebra(sl2):
    assert lr.ideal_closure_L(sl2, span([vec([0, 1, 0])], 3)) == sl2.full_l


def test_closure_gl2n_traceless(gl2n):
    got = lr.ideal_closure_L(gl2n, span([vec([0, 0, 1, 0])], 4))
    traceless = span([vec([1, -1, 0, 0]), vec([0, 0, 1, 0]), vec([0, 0, 0, 1])], 4)
    assert got == traceless
    assert lr.is_lie_rinehart_ideal(gl2n, got)[0]


def test_closure_trunc4_top_degree(trunc4):
    top = span([vec([0, 0, 0, 1])], 4)
    assert lr.ideal_closure_A(trunc4, top) == top


def test_closure_operator_laws_seeded(any_instance):
    inst = any_instance
    rnd = random.Random(99)
    n = inst.dim_l
    for _ in range(15):
        gens = [tuple(Q(rnd.randrange(-2, 3)) for _ in range(n)) for _ in range(rnd.randrange(0, 3))]
        s = span(gens, n)
        extra = span([tuple(Q(rnd.randrange(-2, 3)) for _ in range(n))], n)
        t = s + extra
        cs, ct = lr.ideal_closure_L(inst, s), lr.ideal_closure_L(inst, t)
        assert s.is_subspace_of(cs)
        assert cs.is_subspace_of(ct)
        assert lr.ideal_closure_L(inst, cs) == cs


# -- simplicity verdicts -------------------------------------------------------------


def test_simple_sl2(sl2):
    v = lr.is_simple_L(sl2)
    assert v.simple is True
    assert v.witness_ideal is None


def test_not_simple_gl2n_traceless_witness(gl2n):
    v = lr.is_simple_L(gl2n)
    assert v.simple is False
    traceless = span([vec([1, -1, 0, 0]), vec([0, 0, 1, 0]), vec([0, 0, 0, 1])], 4)
    assert v.witness_ideal == traceless
    assert set(v.witness_root_support) == {F([1, -1]), F([-1, 1])}
    ok, _ = lr.is_lie_rinehart_ideal(gl2n, v.witness_ideal)
    assert ok
    assert v.split_pair is None  # support is symmetric, no one-sided split


def test_not_simple_a_trunc4_top_witness(trunc4):
    v = lr.is_simple_A(trunc4)
    assert v.simple is False
    assert v.witness_ideal == span([vec([0, 0, 0, 1])], 4)
    assert lr.is_assoc_ideal(trunc4, v.witness_ideal)[0]


def test_simple_a_sl2_ground_field(sl2):
    assert lr.is_simple_A(sl2).simple is True


def test_simple_a_inconclusive_for_gl2n(gl2n):
    v = lr.is_simple_A(gl2n)
    assert v.simple is None  # center of A is all of A


def test_simple_a_inconclusive_without_weights(sl2sl2):
    # A = Q x Q has the proper ideal Q x 0 invisible to weight sectors;
    # the verdict must decline rather than guess.
    assert lr.is_simple_A(sl2sl2).simple is None


def test_sl2sl2_not_simple_block_witness(sl2sl2):
    v = lr.is_simple_L(sl2sl2)
    assert v.simple is False
    assert v.witness_ideal.dim == 3
    assert lr.is_lie_rinehart_ideal(sl2sl2, v.witness_ideal)[0]


def test_witness_support_dichotomy(any_instance):
    # support of any produced witness is one-sided or a full symmetric class
    v = lr.is_simple_L(any_instance)
    if v.witness_ideal is None or v.witness_root_support is None:
        return
    sup = set(v.witness_root_support)
    one_sided = all(-g not in sup for g in sup)
    classes = [set(c.members) for c in lr.root_classes(any_instance)]
    assert one_sided or sup in classes


# -- the two-ideal split machinery ----------------------------------------------------


def test_opposite_half_formula(gl2n):
    half = opposite_half_ideal(gl2n, [F([1, -1])])
    assert half == span([vec([0, 0, 0, 1])], 4)  # just L_{(-1,1)}; (1,-1) is no weight
    with pytest.raises(ValueError):
        opposite_half_ideal(gl2n, [F([2, 0])])


def test_toy_split_attempted_but_rejected():
    toy = toy_two_roots()
    assert lr.validate(toy).valid
    v = lr.is_simple_L(toy)
    assert v.simple is False
    assert v.witness_ideal.dim == 1
    # support is one-sided and covers half the roots, so the split is tried,
    # but each half has zero bracket, hence fails per-factor simplicity
    sup = set(v.witness_root_support)
    assert len(sup) == 1 and all(-g not in sup for g in sup)
    assert v.split_pair is None
    half = opposite_half_ideal(toy, sorted(sup))
    assert (v.witness_ideal + half).dim == 2  # e and f halves, no Cartan part


def test_split_pair_postconditions_wherever_produced(any_instance):
    for rep in (lr.fine_decomposition(any_instance).lie_components,):
        for ana in rep:
            if ana.verdict is None or ana.verdict.split_pair is None:
                continue
            a, b = ana.verdict.split_pair
            assert a.intersect(b).is_zero
            assert lr.product_span(
                any_instance.bracket, a.basis, b.basis, any_instance.dim_l
            ).is_zero


# -- fine decomposition ----------------------------------------------------------------


def test_fine_sl2sl2_components_simple(sl2sl2):
    rep = lr.fine_decomposition(sl2sl2)
    assert len(rep.lie_components) == 2
    for ana in rep.lie_components:
        assert ana.hypotheses.applicable
        assert ana.verdict.simple is True
        assert ana.dichotomy_confirmed is True
    assert rep.assoc_components == ()
    assert not rep.tightness.overall


def test_fine_sl2_single_simple_component(sl2):
    rep = lr.fine_decomposition(sl2)
    (ana,) = rep.lie_components
    assert ana.verdict.simple is True and ana.dichotomy_confirmed is True


def test_fine_gl2n_flags(gl2n):
    rep = lr.fine_decomposition(gl2n)
    assert not rep.tightness.overall  # report flags non-tight
    (ana,) = rep.lie_components
    assert ana.hypotheses.applicable  # regime holds for the component
    assert ana.verdict.simple is False  # the component pair degenerates: AA = 0
    assert "AA = 0" in ana.verdict.reason
    (aana,) = rep.assoc_components
    assert not aana.hypotheses.center_zero and aana.verdict is None


def test_fine_trunc4_reports_hypothesis_failure(trunc4):
    rep = lr.fine_decomposition(trunc4)
    (ana,) = rep.lie_components
    assert not ana.hypotheses.symmetric
    assert ana.verdict is None and ana.dichotomy_confirmed is None


def test_fine_pairing_matches_direct_products(trunc3, trunc4):
    assert lr.fine_decomposition(trunc4).pairing == ((0, (0,)),)
    assert lr.fine_decomposition(trunc3).pairing == ((0, ()),)
