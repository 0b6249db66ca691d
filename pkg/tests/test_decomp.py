"""Class ideals, ideal checks, centers, tightness, decompositions, pairing."""

from __future__ import annotations

from fractions import Fraction

import pytest

import lierinehart as lr
from lierinehart import Functional, span, vec

Q = Fraction
F = Functional.of


def class_with(classes, member):
    return next(c for c in classes if member in c.members)


# -- build_root_ideal ------------------------------------------------------------


def test_root_ideal_sl2(sl2):
    cls = lr.root_classes(sl2)[0]
    cand = lr.build_root_ideal(sl2, cls)
    assert cand.zero_part == span([vec([1, 0, 0])], 3)  # [e,f] = h
    assert cand.graded_part == span([vec([0, 1, 0]), vec([0, 0, 1])], 3)
    assert cand.total == sl2.full_l


def test_root_ideal_trunc4(trunc4):
    cand = lr.build_root_ideal(trunc4, lr.root_classes(trunc4)[0])
    assert cand.zero_part.is_zero  # no opposite sectors: both sums are empty
    assert cand.graded_part == span([vec([0, 1, 0]), vec([0, 0, 1])], 3)


def test_root_ideal_sl2sl2_first_block(sl2sl2):
    cls = class_with(lr.root_classes(sl2sl2), F([2, 0]))
    cand = lr.build_root_ideal(sl2sl2, cls)
    block = span([vec([1, 0, 0, 0, 0, 0]), vec([0, 0, 1, 0, 0, 0]), vec([0, 0, 0, 1, 0, 0])], 6)
    assert cand.total == block


def test_root_ideal_rejects_foreign_class(sl2, trunc4):
    cls = lr.root_classes(trunc4)[0]
    with pytest.raises(ValueError):
        lr.build_root_ideal(sl2, cls)


# -- build_weight_ideal -----------------------------------------------------------


def test_weight_ideal_trunc4(trunc4):
    cand = lr.build_weight_ideal(trunc4, lr.weight_classes(trunc4)[0])
    assert cand.zero_part.is_zero
    assert cand.graded_part == span(
        [vec([0, 1, 0, 0]), vec([0, 0, 1, 0]), vec([0, 0, 0, 1])], 4
    )


def test_weight_ideal_gl2n(gl2n):
    cand = lr.build_weight_ideal(gl2n, lr.weight_classes(gl2n)[0])
    assert cand.zero_part.is_zero
    assert cand.total == gl2n.full_a


def test_no_weight_ideals_for_sl2(sl2):
    assert lr.weight_classes(sl2) == ()


def test_root_ideal_equals_closure_of_graded_part(any_instance):
    """Dual route: the class ideal is the least ideal containing its graded
    part, so building it from the designated products must agree with the
    independent fixpoint closure."""
    inst = any_instance
    for cls in lr.root_classes(inst):
        cand = lr.build_root_ideal(inst, cls)
        assert lr.ideal_closure_L(inst, cand.graded_part) == cand.total
    # A-side: the closure only multiplies, so it may miss anchor-image parts
    # of the zero part in general; containment is the guaranteed direction.
    for cls in lr.weight_classes(inst):
        cand = lr.build_weight_ideal(inst, cls)
        assert lr.ideal_closure_A(inst, cand.graded_part).is_subspace_of(cand.total)


# -- ideal membership checks ------------------------------------------------------


def test_class_ideals_pass_ideal_check(any_instance):
    inst = any_instance
    for cls in lr.root_classes(inst):
        ok, violation = lr.is_lie_rinehart_ideal(inst, lr.build_root_ideal(inst, cls).total)
        assert ok, violation
    for cls in lr.weight_classes(inst):
        ok, violation = lr.is_assoc_ideal(inst, lr.build_weight_ideal(inst, cls).total)
        assert ok, violation


def test_span_e_is_not_an_ideal_of_sl2(sl2):
    ok, violation = lr.is_lie_rinehart_ideal(sl2, span([vec([0, 1, 0])], 3))
    assert not ok
    assert violation.condition == "bracket"
    assert violation.product == vec([1, 0, 0])  # [e,f] = h escapes span{e}


def test_trunc4_der_ideal_includes_anchor_condition(trunc4):
    s = span([vec([0, 1, 0]), vec([0, 0, 1])], 3)
    ok, _ = lr.is_lie_rinehart_ideal(trunc4, s)
    assert ok
    # rho(x^2 d)(x) * L = x^2 . L = span{x^3 d} lands inside s
    d = trunc4.anchor_apply(vec([0, 1, 0]), vec([0, 1, 0, 0]))
    assert d == vec([0, 0, 1, 0])
    assert s.contains(trunc4.act(d, vec([1, 0, 0])))


def test_assoc_ideal_examples(trunc4):
    assert lr.is_assoc_ideal(trunc4, span([vec([0, 1, 0, 0]), vec([0, 0, 1, 0]), vec([0, 0, 0, 1])], 4))[0]
    assert lr.is_assoc_ideal(trunc4, span([vec([0, 0, 0, 1])], 4))[0]
    ok, violation = lr.is_assoc_ideal(trunc4, span([vec([1, 0, 0, 0])], 4))
    assert not ok and violation.condition == "mul"


# -- centers ----------------------------------------------------------------------


def test_centers(sl2, trunc4, gl2n):
    assert lr.center_L(sl2).is_zero
    assert lr.center_A(trunc4).is_zero
    assert lr.center_L(gl2n).is_zero  # the scalar matrices have nonzero anchor
    assert lr.center_A(gl2n) == gl2n.full_a  # square-zero product annihilates


# -- tightness --------------------------------------------------------------------


def test_tightness_named_failures(sl2, trunc4, gl2n):
    t = lr.is_tight(sl2)
    assert not t.overall and t.failing == ("a0_condition",)
    assert t.h_condition and t.center_l_zero and t.center_a_zero

    t4 = lr.is_tight(trunc4)
    assert not t4.overall and "h_condition" in t4.failing
    assert t4.h_products.is_zero  # both sums over the H side are empty

    tg = lr.is_tight(gl2n)
    assert not tg.overall and "h_condition" in tg.failing
    assert tg.h_products == span([vec([1, -1, 0, 0])], 4)  # span{x dx - y dy}
    assert tg.a0_condition  # A_0 = 0 equals the empty product sum


# -- decompositions ---------------------------------------------------------------


def test_decompose_sl2sl2(sl2sl2):
    rep = lr.decompose_L(sl2sl2)
    assert len(rep.components) == 2
    assert sorted(c.ideal.total.dim for c in rep.components) == [3, 3]
    assert rep.complement.is_zero
    assert rep.sum_is_direct and rep.covers_whole and rep.pairwise_orthogonal
    assert rep.directness_guaranteed  # zero center and spanning H condition hold


def test_decompose_sl2(sl2):
    rep = lr.decompose_L(sl2)
    assert len(rep.components) == 1
    assert rep.components[0].ideal.total == sl2.full_l
    assert rep.complement.is_zero and rep.sum_is_direct


def test_decompose_a_trunc4(trunc4):
    rep = lr.decompose_A(trunc4)
    assert len(rep.components) == 1
    assert rep.components[0].ideal.total == span(
        [vec([0, 1, 0, 0]), vec([0, 0, 1, 0]), vec([0, 0, 0, 1])], 4
    )
    assert rep.complement == span([vec([1, 0, 0, 0])], 4)  # V = span{1}
    assert rep.sum_is_direct and rep.covers_whole


def test_decompose_coverage_always(any_instance):
    inst = any_instance
    lrep = lr.decompose_L(inst)
    arep = lr.decompose_A(inst)
    assert lrep.covers_whole and arep.covers_whole
    assert lrep.pairwise_orthogonal and arep.pairwise_orthogonal


# -- pairing ----------------------------------------------------------------------


def test_pairings(sl2, trunc3, trunc4):
    for inst, expected in ((trunc4, ((0, (0,)),)), (trunc3, ((0, ()),)), (sl2, ((0, ()),))):
        lrep = lr.decompose_L(inst)
        arep = lr.decompose_A(inst)
        assert lr.find_pairings(inst, lrep, arep) == expected


def test_pairing_rejects_foreign_reports(sl2, trunc4):
    lrep = lr.decompose_L(sl2)
    arep = lr.decompose_A(trunc4)
    with pytest.raises(ValueError):
        lr.find_pairings(sl2, lrep, arep)
    with pytest.raises(ValueError):
        lr.find_pairings(sl2, lrep, lrep)
