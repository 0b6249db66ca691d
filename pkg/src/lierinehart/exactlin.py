"""Exact linear algebra over the rationals.

Vectors are plain tuples of ``fractions.Fraction``.  Subspaces carry a
reduced row-echelon basis, which is unique per subspace, so subspace
equality is plain structural equality and every set-level question
(membership, containment, dimension counting) is decidable exactly.

Everything in this module is immutable and pure; values can be shared
freely between concurrent tasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
Vec = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatch(ValueError):
    """Operands live in ambient spaces of different dimensions."""


def vec(entries: Iterable) -> Vec:
    """Coerce an iterable of ints / rationals / 'p/q' strings to a vector."""
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> Vec:
    return (_ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    if not 0 <= i < n:
        raise IndexError(f"unit vector index {i} out of range for dimension {n}")
    return tuple(_ONE if j == i else _ZERO for j in range(n))


def is_zero_vec(v: Vec) -> bool:
    return all(e == 0 for e in v)


def vec_add(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v: Vec) -> Vec:
    return tuple(-a for a in v)


def vec_scale(c, v: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vec_concat(parts: Iterable[Vec]) -> Vec:
    out: list[Fraction] = []
    for p in parts:
        out.extend(p)
    return tuple(out)


def _eliminate(
    rows: Sequence[Vec], carry: Sequence[Vec] | None
) -> tuple[list[Vec], list[int], list[Vec], list[Vec]]:
    """Gauss-Jordan on ``rows``, mirroring every row operation on ``carry``.

    Returns ``(reduced, pivots, reduced_carry, null_carry)`` where
    ``reduced`` are the nonzero rows in reduced echelon form with pivot
    columns ``pivots``, and ``null_carry`` holds the carry rows of input
    combinations that vanished.  The null carries encode the linear
    dependencies among the input rows, which is what both nullspace and
    subspace-intersection computations need.
    """
    work = [list(r) for r in rows]
    car = [list(c) for c in carry] if carry is not None else [[] for _ in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        sel = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        car[r], car[sel] = car[sel], car[r]
        inv = 1 / work[r][col]
        if inv != 1:
            work[r] = [inv * a for a in work[r]]
            car[r] = [inv * a for a in car[r]]
        for i in range(len(work)):
            f = work[i][col]
            if i != r and f != 0:
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
                car[i] = [a - f * b for a, b in zip(car[i], car[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    reduced = [tuple(w) for w in work[:r]]
    reduced_carry = [tuple(c) for c in car[:r]]
    null_carry = [tuple(c) for c in car[r:]]
    return reduced, pivots, reduced_carry, null_carry


def rref(rows: Sequence[Vec]) -> tuple[list[Vec], list[int]]:
    """Reduced row-echelon form of the given rows; zero rows are dropped."""
    reduced, pivots, _, _ = _eliminate(rows, None)
    return reduced, pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n, held as a reduced row-echelon basis.

    The echelon basis is canonical: two Subspace values are equal exactly
    when they describe the same subspace.  The zero subspace has an empty
    basis.  Construction enforces the echelon invariants (rows nonzero,
    pivots strictly increasing, pivot entries 1 and alone in their
    columns); use :func:`span` to build from arbitrary generators.
    """

    ambient_dim: int
    basis: tuple[Vec, ...]

    def __post_init__(self) -> None:
        last_pivot = -1
        for r, row in enumerate(self.basis):
            if len(row) != self.ambient_dim:
                raise DimensionMismatch("basis row length differs from ambient dimension")
            p = next((i for i, e in enumerate(row) if e != 0), None)
            if p is None:
                raise ValueError("echelon basis rows must be nonzero")
            if p <= last_pivot or row[p] != 1:
                raise ValueError("basis is not in reduced row-echelon form")
            if any(other[p] != 0 for k, other in enumerate(self.basis) if k != r):
                raise ValueError("pivot column is not cleared in the other rows")
            last_pivot = p

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, e in enumerate(row) if e != 0) for row in self.basis)

    def reduce(self, v: Vec) -> Vec:
        """Residual of v after eliminating this subspace's pivot columns.

        The residual is zero exactly when v lies in the subspace, and the
        map v -> residual is linear.
        """
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} vs ambient dimension {self.ambient_dim}"
            )
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = w[p]
            if f != 0:
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Vec) -> bool:
        return is_zero_vec(self.reduce(v))

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces have different ambient dimensions")
        return all(other.contains(b) for b in self.basis)

    def coords_of(self, v: Vec) -> Vec:
        """Coordinates of v relative to the echelon basis (v must belong)."""
        if not self.contains(v):
            raise ValueError("vector does not belong to the subspace")
        return tuple(v[p] for p in self.pivots)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces have different ambient dimensions")
        return span(list(self.basis) + list(other.basis), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the Zassenhaus trick.

        Rows [b | b] for b in self and [c | 0] for c in other are reduced on
        the left block; combinations whose left block vanished have right
        blocks spanning the intersection.
        """
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch("subspaces have different ambient dimensions")
        n = self.ambient_dim
        lefts = list(self.basis) + list(other.basis)
        carries = list(self.basis) + [zero_vec(n)] * other.dim
        _, _, _, null_carry = _eliminate(lefts, carries)
        return span(null_carry, n)

    def complement_in(self, within: "Subspace") -> "Subspace":
        """Deterministic complement of self inside ``within``.

        Relative to within's echelon basis, self occupies the pivot
        directions of its coordinate matrix; the complement is spanned by
        within's basis rows at the remaining (lowest-index-first)
        coordinate positions.  For within = full space this picks the
        standard basis vectors at self's non-pivot columns.
        """
        if not self.is_subspace_of(within):
            raise ValueError("complement_in requires the subspace to be contained in `within`")
        wpiv = within.pivots
        coord_rows = [tuple(b[p] for p in wpiv) for b in self.basis]
        _, cpiv = rref(coord_rows)
        taken = set(cpiv)
        picked = [within.basis[j] for j in range(within.dim) if j not in taken]
        return span(picked, self.ambient_dim)


def span(vectors: Sequence[Vec], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(v)} in span over dimension {ambient_dim}"
            )
    basis, _ = rref(vectors)
    return Subspace(ambient_dim, tuple(basis))


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    return s + t


def subspace_intersect(s: Subspace, t: Subspace) -> Subspace:
    return s.intersect(t)


def complement(s: Subspace, within: Subspace) -> Subspace:
    return s.complement_in(within)


def left_nullspace(rows: Sequence[Vec], width: int) -> Subspace:
    """All coefficient vectors c with  sum_i c_i * rows[i] = 0.

    The result lives in Q^len(rows).  ``width`` is the common length of the
    rows (needed so that zero rows of width 0 are handled coherently).
    """
    for r in rows:
        if len(r) != width:
            raise DimensionMismatch("rows of uneven width in left_nullspace")
    m = len(rows)
    identity = [unit_vec(m, i) for i in range(m)]
    _, _, _, null_carry = _eliminate(rows, identity)
    return span(null_carry, m)


def mat_inverse(rows: Sequence[Vec]) -> tuple[Vec, ...]:
    """Inverse of the square matrix whose i-th row is rows[i]."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionMismatch("matrix is not square")
    identity = [unit_vec(n, i) for i in range(n)]
    reduced, pivots, carry, _ = _eliminate(rows, identity)
    if len(reduced) != n:
        raise ValueError("matrix is singular")
    assert pivots == list(range(n))
    return tuple(carry)


def mat_apply_row(v: Vec, rows: Sequence[Vec]) -> Vec:
    """Row vector times matrix: (v M)_c = sum_p v_p rows[p][c]."""
    if len(v) != len(rows):
        raise DimensionMismatch("row vector length does not match matrix height")
    width = len(rows[0]) if rows else 0
    out = [_ZERO] * width
    for coeff, row in zip(v, rows):
        if coeff != 0:
            for c, e in enumerate(row):
                if e != 0:
                    out[c] += coeff * e
    return tuple(out)
