"""Presenting a split Lie-Rinehart algebra and validating its axioms.

Run:  python demos/02_validate_instance.py
"""

from dataclasses import replace

from lierinehart import SparseTrilinearTable, fixture, validate
from lierinehart.reporting import validation_text

# F_TRUNC4: A = Q[x]/(x^4), L = Der(A) = span{x d, x^2 d, x^3 d}, anchor the
# inclusion.  The Cartan element x d grades everything by integer weights.
inst = fixture("F_TRUNC4")
print(validation_text(validate(inst)))

# The validator is a diagnostic tool, not a gate: break one structure
# constant and it reports exactly which law failed and where, while the
# other checks still run.
bad_bracket = SparseTrilinearTable(
    tuple(e for e in inst.bracket_table.entries if e[:3] != (0, 1, 1)) + ((0, 1, 1, 5),)
)
broken = replace(inst, bracket_table=bad_bracket, name="F_TRUNC4-broken")
print(validation_text(validate(broken)))
