"""Finite presentations of split Lie-Rinehart algebras, and the axiom validator.

An instance is presented by a graded basis of the Lie algebra L (zero
sector = the splitting Cartan subalgebra H), a graded basis of the
commutative algebra A (zero sector = A_0), and four sparse structure
tables: the Lie bracket, the product of A, the action of A on L, and the
anchor map into derivations of A.  Root and weight labels are linear
functionals on H stored as their value tuples on the chosen H basis.

The grading is part of the input; ``validate`` then checks exhaustively,
over basis triples, that the presentation really is a split Lie-Rinehart
algebra (checks V1..V10 below).  Validation never aborts on a failed
axiom: it always returns a full report with first counterexamples in
lexicographic basis order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import (
    DimensionMismatch,
    Subspace,
    Vec,
    is_zero_vec,
    left_nullspace,
    span,
    unit_vec,
    vec_add,
    vec_concat,
    vec_neg,
    vec_scale,
    vec_sub,
    zero_vec,
)


class StructureError(ValueError):
    """The presentation data itself is malformed (indices, labels, keys)."""


class InternalConsistencyError(RuntimeError):
    """A proved property failed on computed output; indicates a bug."""


@dataclass(frozen=True, order=True)
class Functional:
    """A linear form on H, stored as its values on the chosen H basis."""

    values: tuple[Fraction, ...]

    @staticmethod
    def of(entries: Iterable) -> "Functional":
        return Functional(tuple(Fraction(e) for e in entries))

    @staticmethod
    def zero(m: int) -> "Functional":
        return Functional((Fraction(0),) * m)

    @property
    def dim(self) -> int:
        return len(self.values)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def __add__(self, other: "Functional") -> "Functional":
        return Functional(tuple(a + b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Functional":
        return Functional(tuple(-a for a in self.values))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class Sector:
    """One graded piece: a label and a contiguous block of basis indices."""

    label: Functional
    start: int
    dim: int

    @property
    def indices(self) -> range:
        return range(self.start, self.start + self.dim)


@dataclass(frozen=True)
class GradedBasis:
    """Ordered sectors covering indices 0..total_dim-1, zero sector first."""

    sectors: tuple[Sector, ...]

    def __post_init__(self) -> None:
        if not self.sectors:
            raise StructureError("a graded basis needs at least the zero sector")
        if not self.sectors[0].label.is_zero:
            raise StructureError("the zero-label sector must be listed first")
        pos = 0
        seen: set[tuple[Fraction, ...]] = set()
        for k, sec in enumerate(self.sectors):
            if sec.start != pos:
                raise StructureError(f"sector {k} starts at {sec.start}, expected {pos}")
            if sec.dim < 0 or (k > 0 and sec.dim == 0):
                raise StructureError(f"sector {k} has invalid dimension {sec.dim}")
            if k > 0 and sec.label.is_zero:
                raise StructureError("only the first sector may carry the zero label")
            if sec.label.values in seen:
                raise StructureError(f"duplicate sector label {sec.label}")
            seen.add(sec.label.values)
            pos += sec.dim

    @staticmethod
    def from_dims(labeled_dims: Sequence[tuple[Functional, int]]) -> "GradedBasis":
        sectors = []
        pos = 0
        for label, dim in labeled_dims:
            sectors.append(Sector(label, pos, dim))
            pos += dim
        return GradedBasis(tuple(sectors))

    @property
    def total_dim(self) -> int:
        last = self.sectors[-1]
        return last.start + last.dim

    @property
    def zero_sector(self) -> Sector:
        return self.sectors[0]

    @property
    def graded_sectors(self) -> tuple[Sector, ...]:
        return self.sectors[1:]

    @property
    def labels(self) -> tuple[Functional, ...]:
        """The nonzero labels (the root system / weight system)."""
        return tuple(s.label for s in self.sectors[1:])

    def sector_with_label(self, f: Functional) -> Sector | None:
        for s in self.sectors:
            if s.label == f:
                return s
        return None

    def sector_of_index(self, i: int) -> Sector:
        for s in self.sectors:
            if i in s.indices:
                return s
        raise IndexError(f"basis index {i} outside graded basis of dim {self.total_dim}")

    def sector_subspace(self, sec: Sector) -> Subspace:
        n = self.total_dim
        return span([unit_vec(n, i) for i in sec.indices], n)


Entry = tuple[int, int, int, Fraction]


@dataclass(frozen=True)
class SparseTrilinearTable:
    """Sparse structure constants: (i, j, k, c) meaning e_i * e_j has
    coefficient c on e_k.  Absent pairs multiply to zero."""

    entries: tuple[Entry, ...]
    _by_pair: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        seen: set[tuple[int, int, int]] = set()
        by_pair: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for i, j, k, c in self.entries:
            if c == 0:
                raise StructureError(f"zero coefficient stored at entry ({i},{j},{k})")
            key = (i, j, k)
            if key in seen:
                raise StructureError(f"duplicate table entry for key ({i},{j},{k})")
            seen.add(key)
            by_pair.setdefault((i, j), []).append((k, c))
        object.__setattr__(self, "entries", tuple(sorted(self.entries)))
        object.__setattr__(self, "_by_pair", by_pair)

    @staticmethod
    def of(raw: Iterable[Sequence]) -> "SparseTrilinearTable":
        return SparseTrilinearTable(
            tuple((int(i), int(j), int(k), Fraction(c)) for i, j, k, c in raw)
        )

    def check_ranges(self, left: int, right: int, out: int, what: str) -> None:
        for i, j, k, _ in self.entries:
            if not (0 <= i < left and 0 <= j < right and 0 <= k < out):
                raise StructureError(f"{what} entry ({i},{j},{k}) out of range")

    def basis_product(self, i: int, j: int, out_dim: int) -> Vec:
        acc = [Fraction(0)] * out_dim
        for k, c in self._by_pair.get((i, j), ()):
            acc[k] += c
        return tuple(acc)

    def product(self, x: Vec, y: Vec, out_dim: int) -> Vec:
        acc = [Fraction(0)] * out_dim
        for (i, j), terms in self._by_pair.items():
            f = x[i] * y[j]
            if f != 0:
                for k, c in terms:
                    acc[k] += f * c
        return tuple(acc)


@dataclass(frozen=True)
class SplitLieRinehartInstance:
    """A finite-dimensional split Lie-Rinehart algebra, by structure constants.

    Invariants beyond structural well-formedness (checked on construction)
    are *not* assumed; run :func:`validate` to check the axioms.
    """

    name: str
    cartan_dim: int
    lie: GradedBasis
    assoc: GradedBasis
    bracket_table: SparseTrilinearTable
    assoc_mul_table: SparseTrilinearTable
    action_table: SparseTrilinearTable
    anchor_table: SparseTrilinearTable

    def __post_init__(self) -> None:
        m = self.cartan_dim
        if m < 0:
            raise StructureError("cartan_dim must be nonnegative")
        if self.lie.zero_sector.dim != m:
            raise StructureError(
                f"Cartan sector has dim {self.lie.zero_sector.dim}, expected cartan_dim={m}"
            )
        for sec in self.lie.sectors + self.assoc.sectors:
            if sec.label.dim != m:
                raise StructureError(f"label {sec.label} has wrong length (expected {m})")
        nl, na = self.lie.total_dim, self.assoc.total_dim
        self.bracket_table.check_ranges(nl, nl, nl, "bracket")
        self.assoc_mul_table.check_ranges(na, na, na, "assoc_mul")
        self.action_table.check_ranges(na, nl, nl, "action")
        self.anchor_table.check_ranges(nl, na, na, "anchor")

    # -- dimensions and distinguished subspaces ---------------------------

    @property
    def dim_l(self) -> int:
        return self.lie.total_dim

    @property
    def dim_a(self) -> int:
        return self.assoc.total_dim

    @property
    def h_space(self) -> Subspace:
        return self.lie.sector_subspace(self.lie.zero_sector)

    @property
    def a0_space(self) -> Subspace:
        return self.assoc.sector_subspace(self.assoc.zero_sector)

    @property
    def full_l(self) -> Subspace:
        return Subspace.full(self.dim_l)

    @property
    def full_a(self) -> Subspace:
        return Subspace.full(self.dim_a)

    def lie_units(self, sec: Sector | None = None) -> list[Vec]:
        idx = sec.indices if sec is not None else range(self.dim_l)
        return [unit_vec(self.dim_l, i) for i in idx]

    def assoc_units(self, sec: Sector | None = None) -> list[Vec]:
        idx = sec.indices if sec is not None else range(self.dim_a)
        return [unit_vec(self.dim_a, i) for i in idx]

    # -- the four bilinear structures --------------------------------------

    def bracket(self, x: Vec, y: Vec) -> Vec:
        self._want(x, self.dim_l), self._want(y, self.dim_l)
        return self.bracket_table.product(x, y, self.dim_l)

    def mul(self, a: Vec, b: Vec) -> Vec:
        self._want(a, self.dim_a), self._want(b, self.dim_a)
        return self.assoc_mul_table.product(a, b, self.dim_a)

    def act(self, a: Vec, x: Vec) -> Vec:
        self._want(a, self.dim_a), self._want(x, self.dim_l)
        return self.action_table.product(a, x, self.dim_l)

    def anchor_apply(self, x: Vec, a: Vec) -> Vec:
        self._want(x, self.dim_l), self._want(a, self.dim_a)
        return self.anchor_table.product(x, a, self.dim_a)

    @staticmethod
    def _want(v: Vec, n: int) -> None:
        if len(v) != n:
            raise DimensionMismatch(f"vector of length {len(v)}, expected {n}")

    # basis-indexed shortcuts used heavily by the validator
    def _br(self, i: int, j: int) -> Vec:
        return self.bracket_table.basis_product(i, j, self.dim_l)

    def _mu(self, i: int, j: int) -> Vec:
        return self.assoc_mul_table.basis_product(i, j, self.dim_a)

    def _ac(self, i: int, j: int) -> Vec:
        return self.action_table.basis_product(i, j, self.dim_l)

    def _an(self, i: int, j: int) -> Vec:
        return self.anchor_table.basis_product(i, j, self.dim_a)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """First counterexample of a failed check: basis indices and both sides."""

    indices: tuple[int, ...]
    lhs: Vec | None
    rhs: Vec | None
    note: str


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    description: str
    passed: bool
    witness: Witness | None


@dataclass(frozen=True)
class ValidationReport:
    instance_name: str
    checks: tuple[CheckResult, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)


CHECK_DESCRIPTIONS = {
    "V1": "bracket is antisymmetric and satisfies the Jacobi identity",
    "V2": "multiplication of A is commutative and associative",
    "V3": "action is a module action: (a*b).x = a.(b.x)",
    "V4": "anchor is a Lie algebra homomorphism into derivations of A",
    "V5": "anchor is A-linear: rho(a.x)(b) = a*(rho(x)(b))",
    "V6": "anchored operators obey the Leibniz rule on products of A",
    "V7": "compatibility [x, a.y] = a.[x,y] + rho(x)(a).y",
    "V8": "Cartan sector acts diagonally with the declared labels",
    "V9": "all four structure tables respect the root/weight grading",
    "V10": "Cartan sector equals its own centralizer in L (maximal abelian)",
}


def _result(check_id: str, witness: Witness | None) -> CheckResult:
    return CheckResult(check_id, CHECK_DESCRIPTIONS[check_id], witness is None, witness)


def _check_v1(inst: SplitLieRinehartInstance) -> CheckResult:
    nl = inst.dim_l
    for i in range(nl):
        for j in range(i, nl):
            s = vec_add(inst._br(i, j), inst._br(j, i))
            if not is_zero_vec(s):
                w = Witness((i, j), inst._br(i, j), vec_neg(inst._br(j, i)),
                            "antisymmetry: [e_i,e_j] != -[e_j,e_i]")
                return _result("V1", w)
    for i in range(nl):
        for j in range(i + 1, nl):
            for k in range(j + 1, nl):
                ei, ej, ek = unit_vec(nl, i), unit_vec(nl, j), unit_vec(nl, k)
                s = vec_add(
                    vec_add(inst.bracket(inst._br(i, j), ek), inst.bracket(inst._br(j, k), ei)),
                    inst.bracket(inst._br(k, i), ej),
                )
                if not is_zero_vec(s):
                    w = Witness((i, j, k), s, zero_vec(nl), "Jacobi cyclic sum is nonzero")
                    return _result("V1", w)
    return _result("V1", None)


def _check_v2(inst: SplitLieRinehartInstance) -> CheckResult:
    na = inst.dim_a
    for i in range(na):
        for j in range(i, na):
            if inst._mu(i, j) != inst._mu(j, i):
                w = Witness((i, j), inst._mu(i, j), inst._mu(j, i), "commutativity fails")
                return _result("V2", w)
    for i in range(na):
        for j in range(na):
            for k in range(na):
                lhs = inst.mul(inst._mu(i, j), unit_vec(na, k))
                rhs = inst.mul(unit_vec(na, i), inst._mu(j, k))
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "(ab)c != a(bc)")
                    return _result("V2", w)
    return _result("V2", None)


def _check_v3(inst: SplitLieRinehartInstance) -> CheckResult:
    na, nl = inst.dim_a, inst.dim_l
    for i in range(na):
        for j in range(na):
            for k in range(nl):
                lhs = inst.act(inst._mu(i, j), unit_vec(nl, k))
                rhs = inst.act(unit_vec(na, i), inst._ac(j, k))
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "(ab).x != a.(b.x)")
                    return _result("V3", w)
    return _result("V3", None)


def _check_v4(inst: SplitLieRinehartInstance) -> CheckResult:
    nl, na = inst.dim_l, inst.dim_a
    for i in range(nl):
        for j in range(nl):
            for k in range(na):
                lhs = inst.anchor_apply(inst._br(i, j), unit_vec(na, k))
                rhs = vec_sub(
                    inst.anchor_apply(unit_vec(nl, i), inst._an(j, k)),
                    inst.anchor_apply(unit_vec(nl, j), inst._an(i, k)),
                )
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "rho([x,y]) != rho(x)rho(y) - rho(y)rho(x)")
                    return _result("V4", w)
    return _result("V4", None)


def _check_v5(inst: SplitLieRinehartInstance) -> CheckResult:
    na, nl = inst.dim_a, inst.dim_l
    for i in range(na):
        for j in range(nl):
            for k in range(na):
                lhs = inst.anchor_apply(inst._ac(i, j), unit_vec(na, k))
                rhs = inst.mul(unit_vec(na, i), inst._an(j, k))
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "rho(a.x)(b) != a*(rho(x)(b))")
                    return _result("V5", w)
    return _result("V5", None)


def _check_v6(inst: SplitLieRinehartInstance) -> CheckResult:
    nl, na = inst.dim_l, inst.dim_a
    for i in range(nl):
        for j in range(na):
            for k in range(na):
                lhs = inst.anchor_apply(unit_vec(nl, i), inst._mu(j, k))
                rhs = vec_add(
                    inst.mul(inst._an(i, j), unit_vec(na, k)),
                    inst.mul(unit_vec(na, j), inst._an(i, k)),
                )
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "rho(x)(ab) != rho(x)(a)b + a rho(x)(b)")
                    return _result("V6", w)
    return _result("V6", None)


def _check_v7(inst: SplitLieRinehartInstance) -> CheckResult:
    nl, na = inst.dim_l, inst.dim_a
    for i in range(nl):
        for j in range(na):
            for k in range(nl):
                lhs = inst.bracket(unit_vec(nl, i), inst._ac(j, k))
                rhs = vec_add(
                    inst.act(unit_vec(na, j), inst._br(i, k)),
                    inst.act(inst._an(i, j), unit_vec(nl, k)),
                )
                if lhs != rhs:
                    w = Witness((i, j, k), lhs, rhs, "[x, a.y] != a.[x,y] + rho(x)(a).y")
                    return _result("V7", w)
    return _result("V7", None)


def _check_v8(inst: SplitLieRinehartInstance) -> CheckResult:
    m, nl, na = inst.cartan_dim, inst.dim_l, inst.dim_a
    for sec in inst.lie.sectors:
        for r in range(m):
            for j in sec.indices:
                expected = vec_scale(sec.label.values[r], unit_vec(nl, j))
                got = inst._br(r, j)
                if got != expected:
                    w = Witness((r, j), got, expected,
                                f"[h_{r}, e_{j}] is not label{sec.label}(h_{r}) * e_{j}")
                    return _result("V8", w)
    for sec in inst.assoc.sectors:
        for r in range(m):
            for j in sec.indices:
                expected = vec_scale(sec.label.values[r], unit_vec(na, j))
                got = inst._an(r, j)
                if got != expected:
                    w = Witness((r, j), got, expected,
                                f"rho(h_{r})(a_{j}) is not label{sec.label}(h_{r}) * a_{j}")
                    return _result("V8", w)
    return _result("V8", None)


def _check_v9(inst: SplitLieRinehartInstance) -> CheckResult:
    tables = (
        ("bracket", inst.bracket_table, inst.lie, inst.lie, inst.lie),
        ("assoc_mul", inst.assoc_mul_table, inst.assoc, inst.assoc, inst.assoc),
        ("action", inst.action_table, inst.assoc, inst.lie, inst.lie),
        ("anchor", inst.anchor_table, inst.lie, inst.assoc, inst.assoc),
    )
    for what, table, left, right, out in tables:
        for i, j, k, _c in table.entries:
            target = left.sector_of_index(i).label + right.sector_of_index(j).label
            out_sec = out.sector_with_label(target)
            if out_sec is None:
                w = Witness((i, j, k), None, None,
                            f"{what}: no sector labeled {target}; product must vanish")
                return _result("V9", w)
            if k not in out_sec.indices:
                w = Witness((i, j, k), None, None,
                            f"{what}: component on index {k} outside the {target} sector")
                return _result("V9", w)
    return _result("V9", None)


def _check_v10(inst: SplitLieRinehartInstance) -> CheckResult:
    m, nl = inst.cartan_dim, inst.dim_l
    rows = [vec_concat([inst._br(r, i) for r in range(m)]) for i in range(nl)]
    centralizer = left_nullspace(rows, m * nl)
    if centralizer != inst.h_space:
        w = Witness((), None, None,
                    f"centralizer of H has dim {centralizer.dim}, H has dim {m}")
        return _result("V10", w)
    return _result("V10", None)


def validate(inst: SplitLieRinehartInstance) -> ValidationReport:
    """Run the full axiom suite; total, exact, never raises on axiom failure."""
    checks = (
        _check_v1(inst), _check_v2(inst), _check_v3(inst), _check_v4(inst),
        _check_v5(inst), _check_v6(inst), _check_v7(inst), _check_v8(inst),
        _check_v9(inst), _check_v10(inst),
    )
    return ValidationReport(inst.name, checks)


def kernel_of_anchor(inst: SplitLieRinehartInstance) -> Subspace:
    """Kernel of the anchor map, as a subspace of L.  Always an ideal."""
    nl, na = inst.dim_l, inst.dim_a
    rows = [vec_concat([inst._an(i, j) for j in range(na)]) for i in range(nl)]
    return left_nullspace(rows, na * na)
