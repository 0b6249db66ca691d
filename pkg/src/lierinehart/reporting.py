"""Text and JSON rendering of analysis reports.

Output order is deterministic: connection classes come out sorted
lexicographically by functional values, so text reports can be golden
tested.  JSON renderings stringify every scalar the same way the
instance files do.
"""

from __future__ import annotations

import json
from typing import Iterable

from .connect import ConnectionClass
from .decomp import DecompositionReport, TightnessRecord
from .exactlin import Subspace
from .instancefile import scalar_to_str
from .model import Functional, ValidationReport, Witness
from .simple import ComponentAnalysis, FineReport, Hypotheses5, SimplicityVerdict


def functional_str(f: Functional) -> str:
    return "(" + ",".join(scalar_to_str(v) for v in f.values) + ")"


def _vec_json(v) -> list[str]:
    return [scalar_to_str(e) for e in v]


def subspace_json(s: Subspace) -> dict:
    return {"ambient_dim": s.ambient_dim, "dim": s.dim, "basis": [_vec_json(b) for b in s.basis]}


def _chain_str(chain: Iterable[Functional]) -> str:
    return "{" + ", ".join(functional_str(z) for z in chain) + "}"


# -- validation -------------------------------------------------------------

def _witness_json(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "indices": list(w.indices),
        "lhs": _vec_json(w.lhs) if w.lhs is not None else None,
        "rhs": _vec_json(w.rhs) if w.rhs is not None else None,
        "note": w.note,
    }


def validation_json(report: ValidationReport) -> dict:
    return {
        "instance": report.instance_name,
        "valid": report.valid,
        "checks": [
            {
                "id": c.check_id,
                "description": c.description,
                "passed": c.passed,
                "witness": _witness_json(c.witness),
            }
            for c in report.checks
        ],
    }


def validation_text(report: ValidationReport) -> str:
    lines = []
    verdict = "VALID" if report.valid else "INVALID"
    passed = sum(1 for c in report.checks if c.passed)
    lines.append(f"instance {report.instance_name}: {verdict} ({passed}/{len(report.checks)} checks passed)")
    for c in report.checks:
        mark = "pass" if c.passed else "FAIL"
        lines.append(f"  {c.check_id:>3}  {c.description}: {mark}")
        if c.witness is not None:
            w = c.witness
            lines.append(f"       witness at basis indices {w.indices}: {w.note}")
            if w.lhs is not None:
                lines.append(f"       lhs = {_vec_json(w.lhs)}")
            if w.rhs is not None:
                lines.append(f"       rhs = {_vec_json(w.rhs)}")
    return "\n".join(lines) + "\n"


# -- connection classes -----------------------------------------------------

def _class_json(cls: ConnectionClass) -> dict:
    return {
        "kind": cls.kind,
        "representative": functional_str(cls.representative),
        "members": [functional_str(m) for m in cls.members],
        "witnesses": {
            functional_str(m): [functional_str(z) for z in chain]
            for m, chain in cls.witnesses
        },
    }


def classes_json(roots, weights) -> dict:
    return {
        "root_classes": [_class_json(c) for c in roots],
        "weight_classes": [_class_json(c) for c in weights],
    }


def classes_text(roots, weights) -> str:
    lines = []
    for title, classes in (("root classes", roots), ("weight classes", weights)):
        lines.append(f"{title} ({len(classes)}):")
        if not classes:
            lines.append("  none")
        for k, cls in enumerate(classes):
            members = ", ".join(functional_str(m) for m in cls.members)
            lines.append(f"  [{k}] members: {members}")
            for m, chain in cls.witnesses:
                lines.append(f"      {functional_str(m)} via {_chain_str(chain)}")
    return "\n".join(lines) + "\n"


# -- tightness ---------------------------------------------------------------

def tightness_json(t: TightnessRecord) -> dict:
    return {
        "center_l_zero": t.center_l_zero,
        "center_a_zero": t.center_a_zero,
        "aa_spans_a": t.aa_spans_a,
        "al_spans_l": t.al_spans_l,
        "h_condition": t.h_condition,
        "a0_condition": t.a0_condition,
        "overall": t.overall,
        "h_products_dim": t.h_products.dim,
        "a0_products_dim": t.a0_products.dim,
    }


def tightness_text(t: TightnessRecord) -> str:
    lines = ["tightness:"]
    for name in ("center_l_zero", "center_a_zero", "aa_spans_a", "al_spans_l",
                 "h_condition", "a0_condition"):
        lines.append(f"  {name}: {'yes' if getattr(t, name) else 'no'}")
    lines.append(f"  overall: {'TIGHT' if t.overall else 'NOT TIGHT'}")
    if not t.overall:
        lines.append(f"  failing: {', '.join(t.failing)}")
    return "\n".join(lines) + "\n"


# -- decompositions -----------------------------------------------------------

def _component_json(comp) -> dict:
    return {
        "class_members": [functional_str(m) for m in comp.connection.members],
        "zero_part_dim": comp.ideal.zero_part.dim,
        "graded_part_dim": comp.ideal.graded_part.dim,
        "total_dim": comp.ideal.total.dim,
        "total": subspace_json(comp.ideal.total),
        "is_ideal": comp.is_ideal,
    }


def decomposition_json(rep: DecompositionReport) -> dict:
    out = {
        "instance": rep.instance_name,
        "side": rep.side,
        "components": [_component_json(c) for c in rep.components],
        "complement_dim": rep.complement.dim,
        "complement": subspace_json(rep.complement),
        "sum_is_direct": rep.sum_is_direct,
        "covers_whole": rep.covers_whole,
        "directness_guaranteed": rep.directness_guaranteed,
        "pairwise_orthogonal": rep.pairwise_orthogonal,
    }
    if rep.pairing is not None:
        out["pairing"] = [{"lie_component": i, "assoc_components": list(h)} for i, h in rep.pairing]
    if rep.tightness is not None:
        out["tightness"] = tightness_json(rep.tightness)
    return out


def decomposition_text(rep: DecompositionReport) -> str:
    side = "L" if rep.side == "lie" else "A"
    comp_name = "U" if rep.side == "lie" else "V"
    lines = [f"decomposition of {side} ({rep.instance_name}):"]
    if not rep.components:
        lines.append("  no components (empty label set)")
    for k, comp in enumerate(rep.components):
        members = ", ".join(functional_str(m) for m in comp.connection.members)
        lines.append(
            f"  component #{k}: class {{{members}}}, dim {comp.ideal.total.dim} "
            f"(zero part {comp.ideal.zero_part.dim}, graded {comp.ideal.graded_part.dim}), "
            f"ideal: {'yes' if comp.is_ideal else 'NO'}"
        )
    lines.append(f"  complement {comp_name}: dim {rep.complement.dim}")
    lines.append(
        f"  sum direct: {'yes' if rep.sum_is_direct else 'no'}; "
        f"covers: {'yes' if rep.covers_whole else 'no'}; "
        f"directness hypotheses: {'hold' if rep.directness_guaranteed else 'fail'}; "
        f"cross products zero: {'yes' if rep.pairwise_orthogonal else 'no'}"
    )
    if rep.pairing is not None:
        for i, hits in rep.pairing:
            target = ", ".join(f"A#{j}" for j in hits) if hits else "none"
            lines.append(f"  pairing: L#{i} -> {target}")
    return "\n".join(lines) + "\n"


# -- simplicity ----------------------------------------------------------------

def verdict_json(v: SimplicityVerdict | None) -> dict | None:
    if v is None:
        return None
    return {
        "simple": v.simple,
        "reason": v.reason,
        "witness_ideal": subspace_json(v.witness_ideal) if v.witness_ideal else None,
        "witness_root_support": [functional_str(f) for f in v.witness_root_support]
        if v.witness_root_support is not None
        else None,
        "split_pair": [subspace_json(v.split_pair[0]), subspace_json(v.split_pair[1])]
        if v.split_pair
        else None,
    }


def _verdict_text(v: SimplicityVerdict | None) -> str:
    if v is None:
        return "no verdict (hypotheses not met)"
    if v.simple is None:
        return f"inconclusive ({v.reason})"
    if v.simple:
        return "simple"
    out = f"not simple ({v.reason})"
    if v.witness_ideal is not None:
        out += f"; witness ideal of dim {v.witness_ideal.dim}"
    if v.split_pair is not None:
        out += f"; splits into simple ideals of dims {v.split_pair[0].dim}+{v.split_pair[1].dim}"
    return out


def hypotheses_json(h: Hypotheses5) -> dict:
    return {
        "symmetric_roots": h.symmetric_roots,
        "symmetric_weights": h.symmetric_weights,
        "root_multiplicative": h.root_multiplicative,
        "maximal_length": h.maximal_length,
        "all_roots_connected": h.all_roots_connected,
        "all_weights_connected": h.all_weights_connected,
    }


def _component_analysis_json(a: ComponentAnalysis) -> dict:
    return {
        "hypotheses": {
            "symmetric": a.hypotheses.symmetric,
            "maximal_length": a.hypotheses.maximal_length,
            "root_multiplicative": a.hypotheses.root_multiplicative,
            "center_zero": a.hypotheses.center_zero,
            "applicable": a.hypotheses.applicable,
        },
        "verdict": verdict_json(a.verdict),
        "dichotomy_confirmed": a.dichotomy_confirmed,
    }


def fine_json(rep: FineReport) -> dict:
    return {
        "instance": rep.lie.instance_name,
        "hypotheses": hypotheses_json(rep.hypotheses),
        "tightness": tightness_json(rep.tightness),
        "lie": decomposition_json(rep.lie),
        "assoc": decomposition_json(rep.assoc),
        "lie_components": [_component_analysis_json(a) for a in rep.lie_components],
        "assoc_components": [_component_analysis_json(a) for a in rep.assoc_components],
        "pairing_unique_when_tight": rep.pairing_unique_when_tight,
    }


def fine_text(rep: FineReport) -> str:
    lines = [f"fine decomposition of {rep.lie.instance_name}:"]
    h = rep.hypotheses
    lines.append(
        "  hypotheses: "
        f"symmetric roots {'yes' if h.symmetric_roots else 'no'}, "
        f"symmetric weights {'yes' if h.symmetric_weights else 'no'}, "
        f"root-multiplicative {'yes' if h.root_multiplicative else 'no'}, "
        f"maximal length {'yes' if h.maximal_length else 'no'}, "
        f"roots connected {'yes' if h.all_roots_connected else 'no'}, "
        f"weights connected {'yes' if h.all_weights_connected else 'no'}"
    )
    lines.append(f"  tight: {'yes' if rep.tightness.overall else 'no'}"
                 + ("" if rep.tightness.overall else f" (failing: {', '.join(rep.tightness.failing)})"))
    for title, drep, analyses in (
        ("L components", rep.lie, rep.lie_components),
        ("A components", rep.assoc, rep.assoc_components),
    ):
        lines.append(f"  {title} ({len(drep.components)}):")
        if not drep.components:
            lines.append("    none")
        for k, (comp, ana) in enumerate(zip(drep.components, analyses)):
            members = ", ".join(functional_str(m) for m in comp.connection.members)
            lines.append(f"    #{k} class {{{members}}}, dim {comp.ideal.total.dim}: {_verdict_text(ana.verdict)}")
            if ana.dichotomy_confirmed is not None:
                lines.append(f"       dichotomy confirmed: {'yes' if ana.dichotomy_confirmed else 'no'}")
    for i, hits in rep.pairing:
        target = ", ".join(f"A#{j}" for j in hits) if hits else "none"
        lines.append(f"  pairing: L#{i} -> {target}")
    if rep.pairing_unique_when_tight is not None:
        lines.append(f"  pairing unique (tight): {'yes' if rep.pairing_unique_when_tight else 'no'}")
    return "\n".join(lines) + "\n"


def to_json_text(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
