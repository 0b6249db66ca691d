"""Class ideals, complements, tightness, and component pairing.

Run:  python demos/04_decomposition.py
"""

from lierinehart import combined_decomposition, direct_sum, fixture, is_tight
from lierinehart.reporting import decomposition_text, tightness_text

# Each connection class contributes an ideal: its root sectors plus the
# designated products that land in the Cartan part.  For the double sl(2)
# the two blocks come out as orthogonal 3-dimensional ideals and the
# complement U inside the Cartan part is zero.
ss = fixture("F_SL2SL2")
lrep, arep = combined_decomposition(ss)
print(decomposition_text(lrep))
print(decomposition_text(arep))

# Tightness asks for zero centers, AA = A, AL = L, and the two product
# coverage conditions.  None of the shipped fixtures is tight, each for an
# instructive reason; here the base field copy of A has no weights at all,
# so nothing can generate A_0.
print(tightness_text(is_tight(fixture("F_SL2"))))

# Pairing: which A components act nontrivially on which L components?
# In F_TRUNC4 the polynomial part span{x,x^2,x^3} moves the derivation
# ideal span{x^2 d, x^3 d}; one degree lower, in F_TRUNC3, the same
# products all truncate to zero and the pairing is empty.
for name in ("F_TRUNC4", "F_TRUNC3"):
    inst = fixture(name)
    rep, _ = combined_decomposition(inst)
    print(name, "pairing:", rep.pairing)

# Direct sums are the decomposition oracle: the result always refines the
# block structure.
z = direct_sum(fixture("F_TRUNC4"), fixture("F_GL2N"))
zrep, _ = combined_decomposition(z)
print(z.name, "component dims:", [c.ideal.total.dim for c in zrep.components])
