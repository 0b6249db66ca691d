"""Instance structure, the bilinear operations, and the validator."""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

import lierinehart as lr
from lierinehart import (
    Functional,
    GradedBasis,
    SparseTrilinearTable,
    StructureError,
    kernel_of_anchor,
    validate,
    vec,
)

from conftest import with_extra_entries

Q = Fraction


# -- structural checks ---------------------------------------------------------


def test_graded_basis_rejects_nonzero_first_sector():
    with pytest.raises(StructureError):
        GradedBasis.from_dims([(Functional.of([1]), 1)])


def test_graded_basis_rejects_duplicate_labels():
    with pytest.raises(StructureError):
        GradedBasis.from_dims(
            [(Functional.zero(1), 1), (Functional.of([2]), 1), (Functional.of([2]), 1)]
        )


def test_graded_basis_rejects_zero_dim_graded_sector():
    with pytest.raises(StructureError):
        GradedBasis.from_dims([(Functional.zero(1), 1), (Functional.of([1]), 0)])


def test_table_rejects_duplicates_and_zeros():
    with pytest.raises(StructureError):
        SparseTrilinearTable.of([(0, 0, 0, 1), (0, 0, 0, 2)])
    with pytest.raises(StructureError):
        SparseTrilinearTable.of([(0, 0, 0, 0)])


def test_instance_rejects_cartan_dim_mismatch(sl2):
    with pytest.raises(StructureError):
        replace(sl2, cartan_dim=2)


def test_table_range_check(sl2):
    with pytest.raises(StructureError):
        with_extra_entries(sl2, "bracket_table", [(0, 9, 0, 1)])


# -- the four operations -------------------------------------------------------


def test_sl2_bracket_values(sl2):
    h, e, f = (vec([1, 0, 0]), vec([0, 1, 0]), vec([0, 0, 1]))
    assert sl2.bracket(e, f) == h
    assert sl2.bracket(h, h) == vec([0, 0, 0])
    assert sl2.bracket(h, e) == vec([0, 2, 0])
    one = vec([1])
    assert sl2.act(one, e) == e
    assert sl2.anchor_apply(e, one) == vec([0])


def test_bilinearity_on_random_vectors(trunc4):
    x = vec([1, 2, -1])
    y = vec([0, 3, 5])
    a = vec([1, 1, 0, 2])
    lhs = trunc4.bracket(vec([2 * c for c in x]), y)
    assert lhs == vec([2 * c for c in trunc4.bracket(x, y)])
    assert trunc4.act(a, vec([c + d for c, d in zip(x, y)])) == vec(
        [c + d for c, d in zip(trunc4.act(a, x), trunc4.act(a, y))]
    )


def test_dimension_mismatch_raises(sl2):
    with pytest.raises(lr.DimensionMismatch):
        sl2.bracket(vec([1, 0]), vec([1, 0, 0]))


# -- validator ----------------------------------------------------------------


def test_all_fixtures_validate(any_instance):
    report = validate(any_instance)
    assert report.valid, report.failed


def test_broken_antisymmetry_names_v1_with_witness(sl2):
    broken = with_extra_entries(sl2, "bracket_table", [(1, 2, 0, 2)])
    report = validate(broken)
    v1 = next(c for c in report.checks if c.check_id == "V1")
    assert not v1.passed
    assert v1.witness.indices == (1, 2)
    assert len(report.checks) == 10  # still a full report


def test_validator_is_total_on_nonsense(sl2):
    broken = with_extra_entries(sl2, "bracket_table", [(0, 0, 1, 5), (1, 2, 0, 0), (1, 2, 2, 3)])
    report = validate(broken)
    assert not report.valid
    assert len(report.checks) == 10


def test_v8_failure_on_wrong_eigenvalue(sl2):
    broken = with_extra_entries(sl2, "bracket_table", [(0, 1, 1, 3), (1, 0, 1, -3)])
    report = validate(broken)
    assert not next(c for c in report.checks if c.check_id == "V8").passed


def test_v9_failure_on_cross_sector_product(sl2sl2):
    # e1 sits at index 2, e2 at index 4; their label sum (2,2) names no sector
    broken = with_extra_entries(sl2sl2, "bracket_table", [(2, 4, 0, 1), (4, 2, 0, -1)])
    report = validate(broken)
    assert not next(c for c in report.checks if c.check_id == "V9").passed


# -- bilinear extension of the axioms to arbitrary vectors ----------------------


def _random_vec(rnd, n):
    return tuple(Q(rnd.randrange(-4, 5), rnd.choice((1, 1, 2, 3))) for _ in range(n))


def test_axioms_extend_to_random_vectors(any_instance):
    """Jacobi, the Leibniz rule, and the bracket/action compatibility hold
    exactly on random rational vectors, not just on basis triples."""
    import random

    inst = any_instance
    rnd = random.Random(hash(inst.name) & 0xFFFF)
    nl, na = inst.dim_l, inst.dim_a
    zero_l, zero_a = vec([0] * nl), vec([0] * na)
    for _ in range(25):
        x, y, z = (_random_vec(rnd, nl) for _ in range(3))
        a, b = (_random_vec(rnd, na) for _ in range(2))
        jac = vec(
            p + q + r
            for p, q, r in zip(
                inst.bracket(inst.bracket(x, y), z),
                inst.bracket(inst.bracket(y, z), x),
                inst.bracket(inst.bracket(z, x), y),
            )
        )
        assert jac == zero_l
        leib_lhs = inst.anchor_apply(x, inst.mul(a, b))
        leib_rhs = vec(
            p + q
            for p, q in zip(
                inst.mul(inst.anchor_apply(x, a), b),
                inst.mul(a, inst.anchor_apply(x, b)),
            )
        )
        assert leib_lhs == leib_rhs
        compat_lhs = inst.bracket(x, inst.act(a, y))
        compat_rhs = vec(
            p + q
            for p, q in zip(
                inst.act(a, inst.bracket(x, y)),
                inst.act(inst.anchor_apply(x, a), y),
            )
        )
        assert compat_lhs == compat_rhs
        assert inst.mul(a, b) == inst.mul(b, a)
        assert inst.bracket(x, x) == zero_l
        assert inst.anchor_apply(inst.bracket(x, y), a) == vec(
            p - q
            for p, q in zip(
                inst.anchor_apply(x, inst.anchor_apply(y, a)),
                inst.anchor_apply(y, inst.anchor_apply(x, a)),
            )
        )


# -- kernel of the anchor ------------------------------------------------------


def test_kernel_of_anchor_sl2_is_everything(sl2):
    assert kernel_of_anchor(sl2) == sl2.full_l


def test_kernel_of_anchor_trunc4_is_zero(trunc4):
    assert kernel_of_anchor(trunc4).is_zero


def test_kernel_of_anchor_gl2n_is_zero(gl2n):
    assert kernel_of_anchor(gl2n).is_zero
