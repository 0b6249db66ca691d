"""Exact subspace arithmetic: the currency every other computation trades in.

Run:  python demos/01_exact_subspaces.py
"""

from fractions import Fraction

from lierinehart import Subspace, complement, span, vec

# Subspaces are stored as reduced row-echelon bases over the rationals, so
# two equal subspaces are structurally identical objects.
s = span([vec([1, 1, 0]), vec([0, 1, 1])], 3)
t = span([vec([2, 2, 0]), vec([0, "1/2", "1/2"]), vec([2, 3, 1])], 3)
print("echelon basis of s:", s.basis)
print("same span, same object:", s == t)

# Sums and intersections satisfy the dimension identity exactly.
u = span([vec([1, 0, -1])], 3)
print("dim(s + u) =", (s + u).dim, " dim(s ^ u) =", s.intersect(u).dim)
print("Grassmann check:", (s + u).dim + s.intersect(u).dim == s.dim + u.dim)

# Complements are deterministic: standard basis vectors at the non-pivot
# columns, lowest index first.
line = span([vec([1, 1])], 2)
print("complement of the diagonal in Q^2:", complement(line, Subspace.full(2)).basis)

# Membership and coordinates are exact; no tolerance is involved anywhere.
v = vec([Fraction(3, 7), Fraction(10, 7), 1])
print("v in s:", s.contains(v))
print("coordinates of (2,3,1) in s:", s.coords_of(vec([2, 3, 1])))
