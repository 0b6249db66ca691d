"""Simplicity analysis: symmetry/multiplicativity hypotheses, ideal
closures, simplicity verdicts, and the fine (per-component) decomposition.

The decision procedure for simplicity works in the regime where every
root and weight sector is one-dimensional and the relevant center is
zero.  There, every ideal that meets a root sector contains the whole
sector, so the lattice generated by ideal closures of single sectors
(under subspace sum) witnesses every graded ideal; a separate greatest-
fixpoint computation rules out ideals hiding entirely inside the Cartan
part (resp. inside A_0).  Outside that regime the verdict is
``inconclusive`` rather than a guess.  Verdicts are three-valued:
``simple`` is True/False/None, where None means inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .connect import root_classes, weight_classes
from .decomp import (
    DecompositionReport,
    TightnessRecord,
    combined_decomposition,
    center_A,
    center_L,
    product_span,
)
from .exactlin import Subspace, Vec, is_zero_vec, left_nullspace, span, vec_concat
from .model import (
    Functional,
    InternalConsistencyError,
    SplitLieRinehartInstance,
    kernel_of_anchor,
)


@dataclass(frozen=True)
class Hypotheses5:
    """The structural hypotheses of the fine decomposition, each testable
    independently by finite enumeration."""

    symmetric_roots: bool
    symmetric_weights: bool
    root_multiplicative: bool
    maximal_length: bool
    all_roots_connected: bool
    all_weights_connected: bool


def _root_mult_clauses(
    inst: SplitLieRinehartInstance,
    roots: Iterable[Functional],
    weights: Iterable[Functional],
) -> bool:
    roots, weights = set(roots), set(weights)
    for g in roots:
        for d in roots:
            if g + d in roots:
                sg, sd = inst.lie.sector_with_label(g), inst.lie.sector_with_label(d)
                if product_span(
                    inst.bracket, inst.lie_units(sg), inst.lie_units(sd), inst.dim_l
                ).is_zero:
                    return False
    for a in weights:
        for g in roots:
            if a + g in roots:
                sa, sg = inst.assoc.sector_with_label(a), inst.lie.sector_with_label(g)
                if product_span(
                    inst.act, inst.assoc_units(sa), inst.lie_units(sg), inst.dim_l
                ).is_zero:
                    return False
    for a in weights:
        for b in weights:
            if a + b in weights:
                sa, sb = inst.assoc.sector_with_label(a), inst.assoc.sector_with_label(b)
                if product_span(
                    inst.mul, inst.assoc_units(sa), inst.assoc_units(sb), inst.dim_a
                ).is_zero:
                    return False
    return True


def check_hypotheses(inst: SplitLieRinehartInstance) -> Hypotheses5:
    """Evaluate all six flags by direct enumeration over the label sets."""
    roots = set(inst.lie.labels)
    weights = set(inst.assoc.labels)
    return Hypotheses5(
        symmetric_roots=roots == {-g for g in roots},
        symmetric_weights=weights == {-a for a in weights},
        root_multiplicative=_root_mult_clauses(inst, roots, weights),
        maximal_length=all(s.dim == 1 for s in inst.lie.graded_sectors)
        and all(s.dim == 1 for s in inst.assoc.graded_sectors),
        all_roots_connected=len(root_classes(inst)) <= 1,
        all_weights_connected=len(weight_classes(inst)) <= 1,
    )


# ---------------------------------------------------------------------------
# ideal closures (least fixed points)
# ---------------------------------------------------------------------------

def ideal_closure_L(
    inst: SplitLieRinehartInstance, s: Subspace, within: Subspace | None = None
) -> Subspace:
    """Smallest subspace containing s that is closed under bracketing with
    all of L, the action of A, and the anchored products rho(S)(A).L.

    With ``within`` given, L is replaced by that subspace throughout, which
    computes closures inside a component viewed as a subalgebra (the
    A-action stays global).  Terminates in at most dim L rounds.
    """
    amb = within if within is not None else inst.full_l
    if not s.is_subspace_of(amb):
        raise ValueError("seed subspace is not contained in the closure ambient")
    current = s
    a_units = inst.assoc_units()
    while True:
        gens: list[Vec] = list(current.basis)
        for b in current.basis:
            gens.extend(inst.bracket(b, w) for w in amb.basis)
            gens.extend(inst.act(a, b) for a in a_units)
            for a in a_units:
                d = inst.anchor_apply(b, a)
                if not is_zero_vec(d):
                    gens.extend(inst.act(d, w) for w in amb.basis)
        new = span(gens, inst.dim_l)
        if new == current:
            return current
        current = new


def ideal_closure_A(
    inst: SplitLieRinehartInstance, s: Subspace, within: Subspace | None = None
) -> Subspace:
    """Smallest subspace containing s closed under multiplication by A
    (or by ``within``, when analysing a component as an algebra)."""
    amb = within if within is not None else inst.full_a
    if not s.is_subspace_of(amb):
        raise ValueError("seed subspace is not contained in the closure ambient")
    current = s
    while True:
        gens: list[Vec] = list(current.basis)
        for b in current.basis:
            gens.extend(inst.mul(m, b) for m in amb.basis)
        new = span(gens, inst.dim_a)
        if new == current:
            return current
        current = new


def _combos(coeffs: Subspace, basis: Sequence[Vec], ambient_dim: int) -> Subspace:
    vecs = []
    for c in coeffs.basis:
        acc = [0] * ambient_dim
        v = None
        for coef, b in zip(c, basis):
            scaled = tuple(coef * e for e in b)
            v = scaled if v is None else tuple(x + y for x, y in zip(v, scaled))
        vecs.append(v)
    return span(vecs, ambient_dim)


def _largest_lie_ideal_inside(
    inst: SplitLieRinehartInstance, bound: Subspace, ambient: Subspace
) -> Subspace:
    """Greatest subspace of ``bound`` whose bracket with ``ambient``, A-action
    images, and anchored products all stay inside it (a greatest fixpoint)."""
    t = bound
    a_units = inst.assoc_units()
    while True:
        if t.dim == 0:
            return t
        rows = []
        for b in t.basis:
            parts = [t.reduce(inst.bracket(b, w)) for w in ambient.basis]
            parts += [t.reduce(inst.act(a, b)) for a in a_units]
            for a in a_units:
                d = inst.anchor_apply(b, a)
                parts += [t.reduce(inst.act(d, w)) for w in ambient.basis]
            rows.append(vec_concat(parts))
        width = len(rows[0])
        coeffs = left_nullspace(rows, width)
        new = _combos(coeffs, t.basis, inst.dim_l)
        if new == t:
            return t
        t = new


def _largest_assoc_ideal_inside(
    inst: SplitLieRinehartInstance, bound: Subspace, ambient: Subspace
) -> Subspace:
    t = bound
    while True:
        if t.dim == 0:
            return t
        rows = [
            vec_concat([t.reduce(inst.mul(m, b)) for m in ambient.basis]) for b in t.basis
        ]
        width = len(rows[0])
        coeffs = left_nullspace(rows, width)
        new = _combos(coeffs, t.basis, inst.dim_a)
        if new == t:
            return t
        t = new


def _lie_center_within(inst: SplitLieRinehartInstance, ambient: Subspace) -> Subspace:
    """Center of a component: {v in ambient : [v, ambient] = 0, rho(v) = 0}."""
    if ambient.dim == 0:
        return ambient
    na = inst.dim_a
    rows = [
        vec_concat(
            [inst.bracket(b, w) for w in ambient.basis]
            + [inst.anchor_apply(b, a) for a in inst.assoc_units()]
        )
        for b in ambient.basis
    ]
    coeffs = left_nullspace(rows, ambient.dim * inst.dim_l + na * na)
    return _combos(coeffs, ambient.basis, inst.dim_l)


def _assoc_center_within(inst: SplitLieRinehartInstance, ambient: Subspace) -> Subspace:
    if ambient.dim == 0:
        return ambient
    rows = [
        vec_concat([inst.mul(b, w) for w in ambient.basis]) for b in ambient.basis
    ]
    coeffs = left_nullspace(rows, ambient.dim * inst.dim_a)
    return _combos(coeffs, ambient.basis, inst.dim_a)


def _is_lie_ideal_within(
    inst: SplitLieRinehartInstance, s: Subspace, ambient: Subspace
) -> bool:
    for b in s.basis:
        if any(not s.contains(inst.bracket(b, w)) for w in ambient.basis):
            return False
        if any(not s.contains(inst.act(a, b)) for a in inst.assoc_units()):
            return False
        for a in inst.assoc_units():
            d = inst.anchor_apply(b, a)
            if any(not s.contains(inst.act(d, w)) for w in ambient.basis):
                return False
    return True


# ---------------------------------------------------------------------------
# simplicity verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimplicityVerdict:
    """Three-valued verdict; None means the inputs fall outside the regime
    the decision procedure covers (never a guess)."""

    simple: bool | None
    reason: str
    witness_ideal: Subspace | None = None
    witness_root_support: tuple[Functional, ...] | None = None
    split_pair: tuple[Subspace, Subspace] | None = None

    @property
    def inconclusive(self) -> bool:
        return self.simple is None


def _lattice(atoms: Sequence[Subspace]) -> set[Subspace]:
    elems = set(atoms)
    changed = True
    while changed:
        changed = False
        for x in list(elems):
            for y in list(elems):
                z = x + y
                if z not in elems:
                    elems.add(z)
                    changed = True
    return elems


def _lie_verdict(
    inst: SplitLieRinehartInstance,
    ambient: Subspace,
    members: Sequence[Functional],
    hpart: Subspace,
    kern: Subspace,
    allow_split: bool,
) -> SimplicityVerdict:
    atoms = []
    for m in members:
        sec = inst.lie.sector_with_label(m)
        atoms.append(ideal_closure_L(inst, inst.lie.sector_subspace(sec), within=ambient))
    lattice = _lattice(atoms)
    allowed = {ambient, kern}
    violations = sorted(
        (x for x in lattice if x not in allowed), key=lambda s: (s.dim, s.basis)
    )
    if violations:
        wit = violations[0]
        if not _is_lie_ideal_within(inst, wit, ambient):
            raise InternalConsistencyError("a computed closure is not an ideal")
        support = tuple(
            m
            for m in members
            if inst.lie.sector_subspace(inst.lie.sector_with_label(m)).is_subspace_of(wit)
        )
        split = _attempt_lie_split(inst, ambient, members, wit, support) if allow_split else None
        return SimplicityVerdict(
            False,
            "a root-sector closure generates a proper ideal",
            wit,
            support,
            split,
        )
    if hpart != ambient:
        guard = _largest_lie_ideal_inside(inst, hpart, ambient)
        if guard.dim != 0 and guard != kern:
            return SimplicityVerdict(
                False, "a nonzero ideal lies inside the Cartan part", guard, ()
            )
    degenerate = []
    if product_span(inst.bracket, ambient.basis, ambient.basis, inst.dim_l).is_zero:
        degenerate.append("[L,L] = 0")
    if product_span(inst.mul, inst.assoc_units(), inst.assoc_units(), inst.dim_a).is_zero:
        degenerate.append("AA = 0")
    if product_span(inst.act, inst.assoc_units(), ambient.basis, inst.dim_l).is_zero:
        degenerate.append("AL = 0")
    if degenerate:
        return SimplicityVerdict(False, "degenerate products: " + ", ".join(degenerate))
    if hpart == ambient:
        return SimplicityVerdict(None, "no root sectors; the graded procedure does not apply")
    return SimplicityVerdict(
        True,
        "all root-sector closures and their sums are trivial ideals, no ideal "
        "hides in the Cartan part, and the defining products are nondegenerate",
    )


def opposite_half_ideal(
    inst: SplitLieRinehartInstance, support: Sequence[Functional]
) -> Subspace:
    """The complementary candidate for a one-sided root support: the direct
    sum of the opposite root sectors L_{-g} and of the Cartan-resident
    action products A_g L_{-g} taken whenever g is also a weight."""
    gens: list[Vec] = []
    for g in support:
        lneg = inst.lie.sector_with_label(-g)
        if lneg is None or lneg.label.is_zero:
            raise ValueError(f"{-g} is not a root of {inst.name}")
        gens.extend(inst.lie_units(lneg))
        a_g = inst.assoc.sector_with_label(g)
        if a_g is not None and not a_g.label.is_zero:
            gens.extend(
                inst.act(a, y)
                for a in inst.assoc_units(a_g)
                for y in inst.lie_units(lneg)
            )
    return span(gens, inst.dim_l)


def _attempt_lie_split(
    inst: SplitLieRinehartInstance,
    ambient: Subspace,
    members: Sequence[Functional],
    witness: Subspace,
    support: Sequence[Functional],
) -> tuple[Subspace, Subspace] | None:
    """Try the two-ideal split: when the witness's root support and its
    negatives partition the member set, build the complementary ideal from
    the opposite sectors and the action products falling into the Cartan
    part, then verify directness, zero bracket, and per-factor simplicity.
    Returns the verified pair or None."""
    sup = set(support)
    neg = {-g for g in sup}
    if (sup & neg) or (sup | neg) != set(members):
        return None
    iprime = opposite_half_ideal(inst, support)
    if (witness + iprime) != ambient or witness.intersect(iprime).dim != 0:
        return None
    if not product_span(inst.bracket, witness.basis, iprime.basis, inst.dim_l).is_zero:
        return None
    if not _is_lie_ideal_within(inst, iprime, ambient):
        return None
    for factor, fmembers in ((witness, tuple(support)), (iprime, tuple(sorted(neg)))):
        if _lie_center_within(inst, factor).dim != 0:
            return None
        fverdict = _lie_verdict(
            inst,
            factor,
            fmembers,
            factor.intersect(inst.h_space),
            kernel_of_anchor(inst).intersect(factor),
            allow_split=False,
        )
        if fverdict.simple is not True:
            return None
    return (witness, iprime)


def _assoc_verdict(
    inst: SplitLieRinehartInstance,
    ambient: Subspace,
    members: Sequence[Functional],
    zeropart: Subspace,
) -> SimplicityVerdict:
    atoms = []
    for m in members:
        sec = inst.assoc.sector_with_label(m)
        atoms.append(ideal_closure_A(inst, inst.assoc.sector_subspace(sec), within=ambient))
    lattice = _lattice(atoms)
    violations = sorted(
        (x for x in lattice if x != ambient), key=lambda s: (s.dim, s.basis)
    )
    if violations:
        wit = violations[0]
        support = tuple(
            m
            for m in members
            if inst.assoc.sector_subspace(inst.assoc.sector_with_label(m)).is_subspace_of(wit)
        )
        return SimplicityVerdict(
            False, "a weight-sector closure generates a proper ideal", wit, support
        )
    if zeropart == ambient:
        if ambient.dim <= 1:
            aa = product_span(inst.mul, ambient.basis, ambient.basis, inst.dim_a)
            if aa.is_zero:
                return SimplicityVerdict(False, "degenerate products: AA = 0")
            return SimplicityVerdict(
                True, "one-dimensional with nonzero product; only trivial ideals exist"
            )
        return SimplicityVerdict(
            None, "no weight sectors; the graded procedure does not apply"
        )
    guard = _largest_assoc_ideal_inside(inst, zeropart, ambient)
    if guard.dim != 0:
        return SimplicityVerdict(
            False, "a nonzero ideal lies inside the zero-weight part", guard, ()
        )
    if product_span(inst.mul, ambient.basis, ambient.basis, inst.dim_a).is_zero:
        return SimplicityVerdict(False, "degenerate products: AA = 0")
    return SimplicityVerdict(
        True,
        "all weight-sector closures and their sums are the whole algebra, no "
        "ideal hides in the zero-weight part, and the product is nonzero",
    )


def is_simple_L(inst: SplitLieRinehartInstance) -> SimplicityVerdict:
    """Simplicity of L; decided only under maximal length with zero center."""
    hyp = check_hypotheses(inst)
    if not hyp.maximal_length:
        return SimplicityVerdict(
            None, "outside the supported regime: some root or weight sector has dim > 1"
        )
    if center_L(inst).dim != 0:
        return SimplicityVerdict(None, "outside the supported regime: center of L is nonzero")
    verdict = _lie_verdict(
        inst,
        inst.full_l,
        inst.lie.labels,
        inst.h_space,
        kernel_of_anchor(inst),
        allow_split=True,
    )
    _check_witness_sanity(inst, verdict, lie_side=True)
    return verdict


def is_simple_A(inst: SplitLieRinehartInstance) -> SimplicityVerdict:
    """Simplicity of A; decided only under maximal length with zero center."""
    hyp = check_hypotheses(inst)
    if not hyp.maximal_length:
        return SimplicityVerdict(
            None, "outside the supported regime: some root or weight sector has dim > 1"
        )
    if center_A(inst).dim != 0:
        return SimplicityVerdict(None, "outside the supported regime: center of A is nonzero")
    verdict = _assoc_verdict(inst, inst.full_a, inst.assoc.labels, inst.a0_space)
    _check_witness_sanity(inst, verdict, lie_side=False)
    return verdict


def _check_witness_sanity(
    inst: SplitLieRinehartInstance, verdict: SimplicityVerdict, lie_side: bool
) -> None:
    from .decomp import is_assoc_ideal, is_lie_rinehart_ideal

    if verdict.witness_ideal is None:
        return
    wit = verdict.witness_ideal
    ok, _ = (is_lie_rinehart_ideal if lie_side else is_assoc_ideal)(inst, wit)
    whole = inst.full_l if lie_side else inst.full_a
    if not ok or wit.dim == 0 or wit == whole:
        raise InternalConsistencyError("simplicity returned an invalid witness ideal")


# ---------------------------------------------------------------------------
# fine decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentHypotheses:
    symmetric: bool
    maximal_length: bool
    root_multiplicative: bool
    center_zero: bool

    @property
    def applicable(self) -> bool:
        return (
            self.symmetric
            and self.maximal_length
            and self.root_multiplicative
            and self.center_zero
        )


@dataclass(frozen=True)
class ComponentAnalysis:
    hypotheses: ComponentHypotheses
    verdict: SimplicityVerdict | None
    dichotomy_confirmed: bool | None


@dataclass(frozen=True)
class FineReport:
    lie: DecompositionReport
    assoc: DecompositionReport
    hypotheses: Hypotheses5
    tightness: TightnessRecord
    pairing: tuple[tuple[int, tuple[int, ...]], ...]
    lie_components: tuple[ComponentAnalysis, ...]
    assoc_components: tuple[ComponentAnalysis, ...]
    pairing_unique_when_tight: bool | None


def fine_decomposition(inst: SplitLieRinehartInstance) -> FineReport:
    """Both coarse decompositions plus per-component simplicity analysis.

    For each component the structural hypotheses are re-checked restricted
    to its own roots (and the weights of its paired A components); where
    they hold, the component is judged as a subalgebra, and a failed
    verdict triggers the two-ideal split attempt.  Components outside the
    regime get no verdict, only the hypothesis record.
    """
    lrep, arep = combined_decomposition(inst)
    hyp = check_hypotheses(inst)
    tight = lrep.tightness
    pairing = lrep.pairing or ()
    kern = kernel_of_anchor(inst)

    lie_parts: list[ComponentAnalysis] = []
    for idx, comp in enumerate(lrep.components):
        members = comp.connection.members
        paired = next((hits for i, hits in pairing if i == idx), ())
        paired_weights = sorted(
            {m for j in paired for m in arep.components[j].connection.members}
        )
        chyp = ComponentHypotheses(
            symmetric=set(members) == {-m for m in members},
            maximal_length=all(
                inst.lie.sector_with_label(m).dim == 1 for m in members
            )
            and all(inst.assoc.sector_with_label(w).dim == 1 for w in paired_weights),
            root_multiplicative=_root_mult_clauses(inst, members, paired_weights),
            center_zero=_lie_center_within(inst, comp.ideal.total).dim == 0,
        )
        if chyp.applicable:
            verdict = _lie_verdict(
                inst,
                comp.ideal.total,
                members,
                comp.ideal.zero_part,
                kern.intersect(comp.ideal.total),
                allow_split=True,
            )
            dichotomy = bool(verdict.simple) or verdict.split_pair is not None
        else:
            verdict, dichotomy = None, None
        lie_parts.append(ComponentAnalysis(chyp, verdict, dichotomy))

    assoc_parts: list[ComponentAnalysis] = []
    for jdx, comp in enumerate(arep.components):
        members = comp.connection.members
        back_paired = [i for i, hits in pairing if jdx in hits]
        paired_roots = sorted(
            {m for i in back_paired for m in lrep.components[i].connection.members}
        )
        chyp = ComponentHypotheses(
            symmetric=set(members) == {-m for m in members},
            maximal_length=all(
                inst.assoc.sector_with_label(m).dim == 1 for m in members
            )
            and all(inst.lie.sector_with_label(g).dim == 1 for g in paired_roots),
            root_multiplicative=_root_mult_clauses(inst, paired_roots, members),
            center_zero=_assoc_center_within(inst, comp.ideal.total).dim == 0,
        )
        if chyp.applicable:
            verdict = _assoc_verdict(inst, comp.ideal.total, members, comp.ideal.zero_part)
            dichotomy = bool(verdict.simple) if verdict.simple is not None else None
        else:
            verdict, dichotomy = None, None
        assoc_parts.append(ComponentAnalysis(chyp, verdict, dichotomy))

    unique = None
    if tight is not None and tight.overall:
        unique = all(len(hits) == 1 for _, hits in pairing)
    return FineReport(
        lie=lrep,
        assoc=arep,
        hypotheses=hyp,
        tightness=tight,
        pairing=pairing,
        lie_components=tuple(lie_parts),
        assoc_components=tuple(assoc_parts),
        pairing_unique_when_tight=unique,
    )
