"""Exact-arithmetic toolkit for finite-dimensional split Lie-Rinehart algebras.

The library represents a split Lie-Rinehart algebra by graded bases and
sparse structure tables over the rationals, validates the defining axioms
exhaustively, computes root/weight connection classes, builds the class
ideals and decompositions with tightness and pairing reports, and decides
simplicity in the one-dimensional-sector regime.
"""

from .exactlin import (
    DimensionMismatch,
    Subspace,
    Vec,
    complement,
    span,
    subspace_intersect,
    subspace_sum,
    unit_vec,
    vec,
    zero_vec,
)
from .model import (
    CheckResult,
    Functional,
    GradedBasis,
    InternalConsistencyError,
    Sector,
    SparseTrilinearTable,
    SplitLieRinehartInstance,
    StructureError,
    ValidationReport,
    Witness,
    kernel_of_anchor,
    validate,
)
from .connect import (
    ConnectionClass,
    root_classes,
    root_reachable_set,
    roots_connected,
    weight_classes,
    weight_reachable_set,
    weights_connected,
)
from .decomp import (
    Component,
    DecompositionReport,
    IdealCandidate,
    TightnessRecord,
    build_root_ideal,
    build_weight_ideal,
    center_A,
    center_L,
    combined_decomposition,
    decompose_A,
    decompose_L,
    find_pairings,
    is_assoc_ideal,
    is_lie_rinehart_ideal,
    is_tight,
    product_span,
)
from .simple import (
    ComponentAnalysis,
    FineReport,
    Hypotheses5,
    SimplicityVerdict,
    check_hypotheses,
    fine_decomposition,
    ideal_closure_A,
    ideal_closure_L,
    is_simple_A,
    is_simple_L,
)
from .instancefile import (
    InstanceFormatError,
    emit_instance,
    load_instance,
    parse_instance,
    save_instance,
)
from .fixtures import direct_sum, fixture, fixture_names, scramble, zero_instance

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "Component",
    "ComponentAnalysis",
    "ConnectionClass",
    "DecompositionReport",
    "DimensionMismatch",
    "FineReport",
    "Functional",
    "GradedBasis",
    "Hypotheses5",
    "IdealCandidate",
    "InstanceFormatError",
    "InternalConsistencyError",
    "Sector",
    "SimplicityVerdict",
    "SparseTrilinearTable",
    "SplitLieRinehartInstance",
    "StructureError",
    "Subspace",
    "TightnessRecord",
    "ValidationReport",
    "Vec",
    "Witness",
    "build_root_ideal",
    "build_weight_ideal",
    "center_A",
    "center_L",
    "check_hypotheses",
    "combined_decomposition",
    "complement",
    "decompose_A",
    "decompose_L",
    "direct_sum",
    "emit_instance",
    "find_pairings",
    "fine_decomposition",
    "fixture",
    "fixture_names",
    "ideal_closure_A",
    "ideal_closure_L",
    "is_assoc_ideal",
    "is_lie_rinehart_ideal",
    "is_simple_A",
    "is_simple_L",
    "is_tight",
    "kernel_of_anchor",
    "load_instance",
    "parse_instance",
    "product_span",
    "root_classes",
    "root_reachable_set",
    "roots_connected",
    "save_instance",
    "scramble",
    "span",
    "subspace_intersect",
    "subspace_sum",
    "unit_vec",
    "validate",
    "vec",
    "weight_classes",
    "weight_reachable_set",
    "weights_connected",
    "zero_instance",
    "zero_vec",
]
