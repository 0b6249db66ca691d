"""Ideal closures and simplicity verdicts.

Run:  python demos/05_simplicity.py
"""

from lierinehart import (
    fine_decomposition,
    fixture,
    ideal_closure_A,
    ideal_closure_L,
    is_simple_A,
    is_simple_L,
    span,
    vec,
)
from lierinehart.reporting import fine_text

# The ideal closure is the least subspace stable under bracketing with L,
# the action of A, and the anchored products.  Seeding with a single root
# vector of sl(2) regenerates everything.
sl2 = fixture("F_SL2")
print("closure of span{e} in sl(2):", ideal_closure_L(sl2, span([vec([0, 1, 0])], 3)).dim, "dims")

# In gl(2) acting on the square-zero algebra, the closure of one
# off-diagonal matrix stops at the traceless part: a proper ideal.
g = fixture("F_GL2N")
traceless = ideal_closure_L(g, span([vec([0, 0, 1, 0])], 4))
print("closure of span{x dy} in gl(2):", traceless.basis)

v = is_simple_L(g)
print("gl(2) simple?", v.simple, "| witness dim:", v.witness_ideal.dim,
      "| root support:", [str(f) for f in v.witness_root_support])

# A = Q[x]/(x^4) keeps a chain of proper ideals; the minimal witness is the
# top nilpotent degree.
t4 = fixture("F_TRUNC4")
print("closure of span{x^3}:", ideal_closure_A(t4, span([vec([0, 0, 0, 1])], 4)).basis)
print("A simple?", is_simple_A(t4).simple, "| witness:", is_simple_A(t4).witness_ideal.basis)

# The fine decomposition re-checks the structural hypotheses per component
# and only then issues verdicts; outside the regime it says so instead of
# guessing.
print()
print(fine_text(fine_decomposition(fixture("F_SL2SL2"))))
print(fine_text(fine_decomposition(t4)))
