"""Class ideals, centers, tightness, and the coarse decompositions.

Each connection class of roots yields a candidate ideal of L: the direct
sum of the class's root sectors and of the designated products landing in
the Cartan part (action products A_{-x} L_x for class members x whose
negative is a weight, plus brackets [L_{-x}, L_x]).  Weight classes yield
candidate ideals of A the same way, using anchor images rho(L_{-b})(A_b)
and products A_{-b} A_b.  All "sums of set products" are computed by
spanning products of basis pairs, which over an exact field equals the
span of the set product; the empty sum is the zero subspace.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import reduce
from typing import Callable, Sequence

from .connect import ConnectionClass, root_classes, weight_classes
from .exactlin import Subspace, Vec, left_nullspace, span, vec_concat
from .model import InternalConsistencyError, SplitLieRinehartInstance


def product_span(
    product: Callable[[Vec, Vec], Vec],
    lefts: Sequence[Vec],
    rights: Sequence[Vec],
    out_dim: int,
) -> Subspace:
    """Span of product(x, y) over all pairs from the two vector lists."""
    return span([product(x, y) for x in lefts for y in rights], out_dim)


def _sum_spaces(spaces: Sequence[Subspace], ambient: int) -> Subspace:
    return reduce(lambda s, t: s + t, spaces, Subspace.zero(ambient))


@dataclass(frozen=True)
class IdealCandidate:
    """zero_part lives in the Cartan (resp. A_0) sector, graded_part is a sum
    of whole root (resp. weight) sectors, total is their direct sum."""

    zero_part: Subspace
    graded_part: Subspace
    total: Subspace


def build_root_ideal(inst: SplitLieRinehartInstance, cls: ConnectionClass) -> IdealCandidate:
    """Candidate ideal of L attached to a root connection class."""
    if cls.kind != "root" or not set(cls.members) <= set(inst.lie.labels):
        raise ValueError("class does not consist of roots of this instance")
    nl = inst.dim_l
    zero_gens: list[Vec] = []
    graded_gens: list[Vec] = []
    for xi in cls.members:
        sec = inst.lie.sector_with_label(xi)
        graded_gens.extend(inst.lie_units(sec))
        neg_a = inst.assoc.sector_with_label(-xi)
        if neg_a is not None and not neg_a.label.is_zero:
            for a in inst.assoc_units(neg_a):
                for x in inst.lie_units(sec):
                    zero_gens.append(inst.act(a, x))
        neg_l = inst.lie.sector_with_label(-xi)
        if neg_l is not None and not neg_l.label.is_zero:
            for y in inst.lie_units(neg_l):
                for x in inst.lie_units(sec):
                    zero_gens.append(inst.bracket(y, x))
    zero_part = span(zero_gens, nl)
    graded_part = span(graded_gens, nl)
    if not zero_part.is_subspace_of(inst.h_space):
        raise InternalConsistencyError("zero part of a root ideal escaped the Cartan sector")
    if zero_part.intersect(graded_part).dim != 0:
        raise InternalConsistencyError("zero and graded parts of a root ideal overlap")
    return IdealCandidate(zero_part, graded_part, zero_part + graded_part)


def build_weight_ideal(inst: SplitLieRinehartInstance, cls: ConnectionClass) -> IdealCandidate:
    """Candidate ideal of A attached to a weight connection class."""
    if cls.kind != "weight" or not set(cls.members) <= set(inst.assoc.labels):
        raise ValueError("class does not consist of weights of this instance")
    na = inst.dim_a
    zero_gens: list[Vec] = []
    graded_gens: list[Vec] = []
    for beta in cls.members:
        sec = inst.assoc.sector_with_label(beta)
        graded_gens.extend(inst.assoc_units(sec))
        neg_l = inst.lie.sector_with_label(-beta)
        if neg_l is not None and not neg_l.label.is_zero:
            for y in inst.lie_units(neg_l):
                for a in inst.assoc_units(sec):
                    zero_gens.append(inst.anchor_apply(y, a))
        neg_a = inst.assoc.sector_with_label(-beta)
        if neg_a is not None and not neg_a.label.is_zero:
            for b in inst.assoc_units(neg_a):
                for a in inst.assoc_units(sec):
                    zero_gens.append(inst.mul(b, a))
    zero_part = span(zero_gens, na)
    graded_part = span(graded_gens, na)
    if not zero_part.is_subspace_of(inst.a0_space):
        raise InternalConsistencyError("zero part of a weight ideal escaped the A_0 sector")
    if zero_part.intersect(graded_part).dim != 0:
        raise InternalConsistencyError("zero and graded parts of a weight ideal overlap")
    return IdealCandidate(zero_part, graded_part, zero_part + graded_part)


@dataclass(frozen=True)
class IdealViolation:
    condition: str  # "bracket" | "action" | "anchor_product" | "mul"
    indices: tuple[int, ...]
    product: Vec


def is_lie_rinehart_ideal(
    inst: SplitLieRinehartInstance, s: Subspace
) -> tuple[bool, IdealViolation | None]:
    """Check the three ideal conditions for a subspace of L on generators:
    [S, L] <= S, A.S <= S, and rho(S)(A).L <= S."""
    if s.ambient_dim != inst.dim_l:
        raise ValueError("subspace does not live in L")
    for b in s.basis:
        for j, x in enumerate(inst.lie_units()):
            v = inst.bracket(b, x)
            if not s.contains(v):
                return False, IdealViolation("bracket", (j,), v)
        for i, a in enumerate(inst.assoc_units()):
            v = inst.act(a, b)
            if not s.contains(v):
                return False, IdealViolation("action", (i,), v)
        for i, a in enumerate(inst.assoc_units()):
            d = inst.anchor_apply(b, a)
            for j, x in enumerate(inst.lie_units()):
                v = inst.act(d, x)
                if not s.contains(v):
                    return False, IdealViolation("anchor_product", (i, j), v)
    return True, None


def is_assoc_ideal(
    inst: SplitLieRinehartInstance, s: Subspace
) -> tuple[bool, IdealViolation | None]:
    """Check A.S <= S for a subspace of A on generators."""
    if s.ambient_dim != inst.dim_a:
        raise ValueError("subspace does not live in A")
    for b in s.basis:
        for i, a in enumerate(inst.assoc_units()):
            v = inst.mul(a, b)
            if not s.contains(v):
                return False, IdealViolation("mul", (i,), v)
    return True, None


# ---------------------------------------------------------------------------
# centers and tightness
# ---------------------------------------------------------------------------

def center_L(inst: SplitLieRinehartInstance) -> Subspace:
    """{v in L : [v, L] = 0 and rho(v) = 0}, by one nullspace computation."""
    nl, na = inst.dim_l, inst.dim_a
    rows = [
        vec_concat([inst._br(i, j) for j in range(nl)] + [inst._an(i, k) for k in range(na)])
        for i in range(nl)
    ]
    return left_nullspace(rows, nl * nl + na * na)


def center_A(inst: SplitLieRinehartInstance) -> Subspace:
    """{a in A : a A = 0}, the annihilator of the multiplication."""
    na = inst.dim_a
    rows = [vec_concat([inst._mu(i, j) for j in range(na)]) for i in range(na)]
    return left_nullspace(rows, na * na)


def _h_product_sum(inst: SplitLieRinehartInstance) -> Subspace:
    """Sum over all roots g of A_{-g} L_g (when -g is a weight) and [L_{-g}, L_g]."""
    gens: list[Vec] = []
    for sec in inst.lie.graded_sectors:
        neg_a = inst.assoc.sector_with_label(-sec.label)
        if neg_a is not None and not neg_a.label.is_zero:
            gens.extend(
                inst.act(a, x) for a in inst.assoc_units(neg_a) for x in inst.lie_units(sec)
            )
        neg_l = inst.lie.sector_with_label(-sec.label)
        if neg_l is not None and not neg_l.label.is_zero:
            gens.extend(
                inst.bracket(y, x) for y in inst.lie_units(neg_l) for x in inst.lie_units(sec)
            )
    return span(gens, inst.dim_l)


def _a0_product_sum(inst: SplitLieRinehartInstance) -> Subspace:
    """Sum over all weights b of rho(L_{-b})(A_b) (when -b is a root) and A_{-b} A_b."""
    gens: list[Vec] = []
    for sec in inst.assoc.graded_sectors:
        neg_l = inst.lie.sector_with_label(-sec.label)
        if neg_l is not None and not neg_l.label.is_zero:
            gens.extend(
                inst.anchor_apply(y, a)
                for y in inst.lie_units(neg_l)
                for a in inst.assoc_units(sec)
            )
        neg_a = inst.assoc.sector_with_label(-sec.label)
        if neg_a is not None and not neg_a.label.is_zero:
            gens.extend(
                inst.mul(b, a) for b in inst.assoc_units(neg_a) for a in inst.assoc_units(sec)
            )
    return span(gens, inst.dim_a)


@dataclass(frozen=True)
class TightnessRecord:
    center_l_zero: bool
    center_a_zero: bool
    aa_spans_a: bool
    al_spans_l: bool
    h_condition: bool
    a0_condition: bool
    h_products: Subspace
    a0_products: Subspace

    @property
    def overall(self) -> bool:
        return (
            self.center_l_zero
            and self.center_a_zero
            and self.aa_spans_a
            and self.al_spans_l
            and self.h_condition
            and self.a0_condition
        )

    @property
    def failing(self) -> tuple[str, ...]:
        names = (
            ("center_l_zero", self.center_l_zero),
            ("center_a_zero", self.center_a_zero),
            ("aa_spans_a", self.aa_spans_a),
            ("al_spans_l", self.al_spans_l),
            ("h_condition", self.h_condition),
            ("a0_condition", self.a0_condition),
        )
        return tuple(n for n, ok in names if not ok)


def is_tight(inst: SplitLieRinehartInstance) -> TightnessRecord:
    """Evaluate the five-part tightness regime (centers split into two flags)."""
    aa = product_span(inst.mul, inst.assoc_units(), inst.assoc_units(), inst.dim_a)
    al = product_span(inst.act, inst.assoc_units(), inst.lie_units(), inst.dim_l)
    h_sum = _h_product_sum(inst)
    a0_sum = _a0_product_sum(inst)
    return TightnessRecord(
        center_l_zero=center_L(inst).dim == 0,
        center_a_zero=center_A(inst).dim == 0,
        aa_spans_a=aa == inst.full_a,
        al_spans_l=al == inst.full_l,
        h_condition=h_sum == inst.h_space,
        a0_condition=a0_sum == inst.a0_space,
        h_products=h_sum,
        a0_products=a0_sum,
    )


# ---------------------------------------------------------------------------
# decomposition reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    connection: ConnectionClass
    ideal: IdealCandidate
    is_ideal: bool
    violation: IdealViolation | None


@dataclass(frozen=True)
class DecompositionReport:
    instance_name: str
    side: str  # "lie" | "assoc"
    components: tuple[Component, ...]
    complement: Subspace
    sum_is_direct: bool
    covers_whole: bool
    directness_guaranteed: bool
    pairwise_orthogonal: bool
    pairing: tuple[tuple[int, tuple[int, ...]], ...] | None = None
    tightness: TightnessRecord | None = None


def _decompose(
    inst: SplitLieRinehartInstance,
    side: str,
    classes: tuple[ConnectionClass, ...],
    build: Callable[[SplitLieRinehartInstance, ConnectionClass], IdealCandidate],
    ideal_check: Callable,
    whole: Subspace,
    zero_sector_space: Subspace,
    center: Subspace,
    cross_product: Callable[[Vec, Vec], Vec],
) -> DecompositionReport:
    comps = []
    for cls in classes:
        cand = build(inst, cls)
        ok, violation = ideal_check(inst, cand.total)
        comps.append(Component(cls, cand, ok, violation))
    ambient = whole.ambient_dim
    zero_sum = _sum_spaces([c.ideal.zero_part for c in comps], ambient)
    comp_sum = _sum_spaces([c.ideal.total for c in comps], ambient)
    comp_complement = zero_sum.complement_in(zero_sector_space)
    covers = (comp_complement + comp_sum) == whole
    direct = comp_sum.dim == sum(c.ideal.total.dim for c in comps)
    guaranteed = center.dim == 0 and zero_sum == zero_sector_space
    if guaranteed and not (direct and comp_complement.dim == 0):
        raise InternalConsistencyError(
            f"{side} decomposition should be direct with trivial complement here"
        )
    orthogonal = True
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            cross = product_span(
                cross_product, comps[i].ideal.total.basis, comps[j].ideal.total.basis, ambient
            )
            if cross.dim != 0:
                orthogonal = False
    if not orthogonal:
        raise InternalConsistencyError(f"distinct {side} components have nonzero products")
    if not covers:
        raise InternalConsistencyError(f"{side} components plus complement do not cover")
    return DecompositionReport(
        instance_name=inst.name,
        side=side,
        components=tuple(comps),
        complement=comp_complement,
        sum_is_direct=direct,
        covers_whole=covers,
        directness_guaranteed=guaranteed,
        pairwise_orthogonal=orthogonal,
    )


def decompose_L(inst: SplitLieRinehartInstance) -> DecompositionReport:
    """Split L into class ideals plus a complement inside the Cartan sector."""
    return _decompose(
        inst,
        "lie",
        root_classes(inst),
        build_root_ideal,
        is_lie_rinehart_ideal,
        inst.full_l,
        inst.h_space,
        center_L(inst),
        inst.bracket,
    )


def decompose_A(inst: SplitLieRinehartInstance) -> DecompositionReport:
    """Split A into class ideals plus a complement inside the A_0 sector."""
    return _decompose(
        inst,
        "assoc",
        weight_classes(inst),
        build_weight_ideal,
        is_assoc_ideal,
        inst.full_a,
        inst.a0_space,
        center_A(inst),
        inst.mul,
    )


def find_pairings(
    inst: SplitLieRinehartInstance,
    lrep: DecompositionReport,
    arep: DecompositionReport,
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """For each L component, the A components whose action on it is nonzero.

    When the instance is tight, each list is checked to have exactly one
    entry; a violation raises InternalConsistencyError.
    """
    if lrep.instance_name != inst.name or arep.instance_name != inst.name:
        raise ValueError("decomposition reports come from a different instance")
    if lrep.side != "lie" or arep.side != "assoc":
        raise ValueError("expected one Lie-side and one A-side report")
    pairs = []
    for i, lc in enumerate(lrep.components):
        hits = tuple(
            j
            for j, ac in enumerate(arep.components)
            if product_span(
                inst.act, ac.ideal.total.basis, lc.ideal.total.basis, inst.dim_l
            ).dim
            != 0
        )
        pairs.append((i, hits))
    if is_tight(inst).overall:
        for i, hits in pairs:
            if len(hits) != 1:
                raise InternalConsistencyError(
                    f"tight instance but L component {i} pairs with {len(hits)} A components"
                )
    return tuple(pairs)


def combined_decomposition(inst: SplitLieRinehartInstance) -> tuple[
    DecompositionReport, DecompositionReport
]:
    """Both decompositions, with pairing and tightness filled in."""
    lrep = decompose_L(inst)
    arep = decompose_A(inst)
    tight = is_tight(inst)
    pairing = find_pairings(inst, lrep, arep)
    lrep = replace(lrep, pairing=pairing, tightness=tight)
    arep = replace(arep, pairing=pairing, tightness=tight)
    return lrep, arep
