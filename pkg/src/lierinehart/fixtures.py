"""Built-in example instances, block direct sums, and basis scrambling.

The fixture library covers the standard small cases:

* ``F_SL2``      sl(2) over the ground field (zero anchor, unital action);
* ``F_SL2SL2``   the block direct sum of two copies of F_SL2;
* ``F_TRUNC3``   derivations of Q[x]/(x^3) acting on it, anchor = inclusion;
* ``F_TRUNC4``   same for Q[x]/(x^4);
* ``F_GL2N``     gl(2) = all derivations of the square-zero algebra on
                 span{x, y}, anchor = inclusion (the action of A on L is
                 identically zero because all products in A vanish).

``scramble`` applies a seeded invertible base change inside every sector
(including the Cartan sector, in which case all root/weight labels are
rewritten accordingly) and a seeded permutation of the nonzero sectors.
Analyses are invariant under scrambling, which makes it the metamorphic
test driver.
"""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction
from typing import Callable

from .exactlin import Vec, mat_apply_row, mat_inverse
from .model import (
    Functional,
    GradedBasis,
    SparseTrilinearTable,
    SplitLieRinehartInstance,
)

Q = Fraction


def _instance(name, m, lie_sectors, assoc_sectors, bracket, mul, action, anchor):
    return SplitLieRinehartInstance(
        name=name,
        cartan_dim=m,
        lie=GradedBasis.from_dims([(Functional.of(l), d) for l, d in lie_sectors]),
        assoc=GradedBasis.from_dims([(Functional.of(l), d) for l, d in assoc_sectors]),
        bracket_table=SparseTrilinearTable.of(bracket),
        assoc_mul_table=SparseTrilinearTable.of(mul),
        action_table=SparseTrilinearTable.of(action),
        anchor_table=SparseTrilinearTable.of(anchor),
    )


def _build_sl2() -> SplitLieRinehartInstance:
    # L basis: h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h; A = Q with the
    # unit acting identically and zero anchor.
    bracket = [
        (0, 1, 1, 2), (1, 0, 1, -2),
        (0, 2, 2, -2), (2, 0, 2, 2),
        (1, 2, 0, 1), (2, 1, 0, -1),
    ]
    action = [(0, j, j, 1) for j in range(3)]
    return _instance(
        "F_SL2", 1,
        [([0], 1), ([2], 1), ([-2], 1)],
        [([0], 1)],
        bracket, [(0, 0, 0, 1)], action, [],
    )


def _build_trunc(n: int) -> SplitLieRinehartInstance:
    # A = Q[x]/(x^n) with basis 1, x, .., x^(n-1); derivations must kill the
    # constant term of D(x), so L has basis x d/dx, .., x^(n-1) d/dx.
    # L index i  <->  x^(i+1) d/dx  (i = 0 is the Cartan element x d/dx),
    # A index j  <->  x^j.
    dim_l, dim_a = n - 1, n
    bracket = []
    for i in range(dim_l):
        for j in range(dim_l):
            # [x^(i+1) d, x^(j+1) d] = (j - i) x^(i+j+1) d
            k = i + j
            if i != j and k < dim_l:
                bracket.append((i, j, k, j - i))
    action = []
    for a in range(dim_a):
        for i in range(dim_l):
            # x^a . x^(i+1) d = x^(a+i+1) d
            k = a + i
            if k < dim_l:
                action.append((a, i, k, 1))
    anchor = []
    for i in range(dim_l):
        for a in range(1, dim_a):
            # rho(x^(i+1) d)(x^a) = a x^(a+i)
            k = a + i
            if k < dim_a:
                anchor.append((i, a, k, a))
    mul = []
    for a in range(dim_a):
        for b in range(dim_a):
            if a + b < dim_a:
                mul.append((a, b, a + b, 1))
    lie_sectors = [([0], 1)] + [([g], 1) for g in range(1, dim_l)]
    assoc_sectors = [([0], 1)] + [([w], 1) for w in range(1, dim_a)]
    return _instance(f"F_TRUNC{n}", 1, lie_sectors, assoc_sectors, bracket, mul, action, anchor)


def _build_gl2n() -> SplitLieRinehartInstance:
    # A = span{x, y} with all products zero; L = Der(A) = gl(2) with basis
    # x dx, y dy (Cartan), x dy, y dx; anchor is the identity inclusion and
    # the action of A on L is zero since A is square-zero.
    bracket = [
        (0, 2, 2, 1), (2, 0, 2, -1),
        (1, 2, 2, -1), (2, 1, 2, 1),
        (0, 3, 3, -1), (3, 0, 3, 1),
        (1, 3, 3, 1), (3, 1, 3, -1),
        (2, 3, 0, 1), (2, 3, 1, -1), (3, 2, 0, -1), (3, 2, 1, 1),
    ]
    anchor = [
        (0, 0, 0, 1),   # rho(x dx)(x) = x
        (1, 1, 1, 1),   # rho(y dy)(y) = y
        (2, 1, 0, 1),   # rho(x dy)(y) = x
        (3, 0, 1, 1),   # rho(y dx)(x) = y
    ]
    return _instance(
        "F_GL2N", 2,
        [([0, 0], 2), ([1, -1], 1), ([-1, 1], 1)],
        [([0, 0], 0), ([1, 0], 1), ([0, 1], 1)],
        bracket, [], [], anchor,
    )


def direct_sum(
    x: SplitLieRinehartInstance, y: SplitLieRinehartInstance
) -> SplitLieRinehartInstance:
    """Block-diagonal combination: Cartan parts concatenate, labels are zero
    padded on the other factor's coordinates, and all cross products vanish."""
    mx, my = x.cartan_dim, y.cartan_dim
    m = mx + my

    def pad_x(f: Functional) -> Functional:
        return Functional(f.values + (Q(0),) * my)

    def pad_y(f: Functional) -> Functional:
        return Functional((Q(0),) * mx + f.values)

    def maps(bx: GradedBasis, by: GradedBasis) -> tuple[dict[int, int], dict[int, int]]:
        zx, zy = bx.zero_sector.dim, by.zero_sector.dim
        xmap = {i: i for i in range(zx)}
        ymap = {i: zx + i for i in range(zy)}
        pos = zx + zy
        for sec in bx.graded_sectors:
            for i in sec.indices:
                xmap[i] = pos
                pos += 1
        for sec in by.graded_sectors:
            for i in sec.indices:
                ymap[i] = pos
                pos += 1
        return xmap, ymap

    def sectors(bx: GradedBasis, by: GradedBasis) -> GradedBasis:
        dims = [(Functional.zero(m), bx.zero_sector.dim + by.zero_sector.dim)]
        dims += [(pad_x(s.label), s.dim) for s in bx.graded_sectors]
        dims += [(pad_y(s.label), s.dim) for s in by.graded_sectors]
        return GradedBasis.from_dims(dims)

    lmap_x, lmap_y = maps(x.lie, y.lie)
    amap_x, amap_y = maps(x.assoc, y.assoc)

    def remap(table: SparseTrilinearTable, other: SparseTrilinearTable, mi, mj, mk, oi, oj, ok):
        entries = [(mi[i], mj[j], mk[k], c) for i, j, k, c in table.entries]
        entries += [(oi[i], oj[j], ok[k], c) for i, j, k, c in other.entries]
        return SparseTrilinearTable(tuple(entries))

    return SplitLieRinehartInstance(
        name=f"direct_sum({x.name},{y.name})",
        cartan_dim=m,
        lie=sectors(x.lie, y.lie),
        assoc=sectors(x.assoc, y.assoc),
        bracket_table=remap(x.bracket_table, y.bracket_table,
                            lmap_x, lmap_x, lmap_x, lmap_y, lmap_y, lmap_y),
        assoc_mul_table=remap(x.assoc_mul_table, y.assoc_mul_table,
                              amap_x, amap_x, amap_x, amap_y, amap_y, amap_y),
        action_table=remap(x.action_table, y.action_table,
                           amap_x, lmap_x, lmap_x, amap_y, lmap_y, lmap_y),
        anchor_table=remap(x.anchor_table, y.anchor_table,
                           lmap_x, amap_x, amap_x, lmap_y, amap_y, amap_y),
    )


def zero_instance() -> SplitLieRinehartInstance:
    """The empty algebra pair; neutral element for direct_sum."""
    return _instance("F_ZERO", 0, [([], 0)], [([], 0)], [], [], [], [])


# ---------------------------------------------------------------------------
# scrambling
# ---------------------------------------------------------------------------

def _random_invertible(rng: random.Random, n: int) -> list[list[Q]]:
    mat = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    if n == 0:
        return mat
    for _ in range(2 * n):
        op = rng.choice(("add", "swap", "scale") if n > 1 else ("scale",))
        if op == "add":
            i, j = rng.sample(range(n), 2)
            lam = Q(rng.choice((-2, -1, 1, 2)))
            mat[i] = [a + lam * b for a, b in zip(mat[i], mat[j])]
        elif op == "swap":
            i, j = rng.sample(range(n), 2)
            mat[i], mat[j] = mat[j], mat[i]
        else:
            i = rng.randrange(n)
            c = Q(rng.choice((-1, 2, 3)))
            mat[i] = [c * a for a in mat[i]]
    return mat


def _scramble_basis(
    rng: random.Random, basis: GradedBasis, total: int
) -> tuple[GradedBasis, list[Vec], list[list[Q]]]:
    """New graded basis with permuted nonzero sectors and a base change per
    sector; returns (new_basis_without_relabel, rows of P, Cartan block)."""
    graded = list(basis.graded_sectors)
    order = list(range(len(graded)))
    rng.shuffle(order)
    new_sector_src = [basis.zero_sector] + [graded[k] for k in order]
    blocks = [_random_invertible(rng, sec.dim) for sec in new_sector_src]
    rows: list[Vec] = []
    for sec, block in zip(new_sector_src, blocks):
        for r in range(sec.dim):
            row = [Q(0)] * total
            for c in range(sec.dim):
                row[sec.start + c] = block[r][c]
            rows.append(tuple(row))
    dims = [(sec.label, sec.dim) for sec in new_sector_src]
    return GradedBasis.from_dims(dims), rows, blocks[0]


def scramble(inst: SplitLieRinehartInstance, seed: int) -> SplitLieRinehartInstance:
    """Seeded sector-preserving base change plus sector reordering.

    The Cartan block of the change matrix rewrites every root and weight
    label (gamma'(h'_r) = sum_p M[r][p] gamma(h_p)), so the result is again
    a valid presentation of the same algebra.
    """
    rng = random.Random(seed)
    new_lie, p_lie, h_block = _scramble_basis(rng, inst.lie, inst.dim_l)
    new_assoc, p_assoc, _ = _scramble_basis(rng, inst.assoc, inst.dim_a)
    m = inst.cartan_dim

    def relabel(f: Functional) -> Functional:
        return Functional(
            tuple(sum((h_block[r][p] * f.values[p] for p in range(m)), Q(0)) for r in range(m))
        )

    def relabel_basis(gb: GradedBasis) -> GradedBasis:
        return GradedBasis.from_dims([(relabel(s.label), s.dim) for s in gb.sectors])

    inv_lie = mat_inverse(p_lie) if p_lie else ()
    inv_assoc = mat_inverse(p_assoc) if p_assoc else ()

    def rebuild(product, p_left, p_right, inv_out, out_dim) -> SparseTrilinearTable:
        entries = []
        for i, li in enumerate(p_left):
            for j, rj in enumerate(p_right):
                w = product(li, rj)
                wn = mat_apply_row(w, inv_out) if inv_out else w
                entries.extend((i, j, k, c) for k, c in enumerate(wn) if c != 0)
        return SparseTrilinearTable(tuple(entries))

    return SplitLieRinehartInstance(
        name=f"{inst.name}~s{seed}",
        cartan_dim=m,
        lie=relabel_basis(new_lie),
        assoc=relabel_basis(new_assoc),
        bracket_table=rebuild(inst.bracket, p_lie, p_lie, inv_lie, inst.dim_l),
        assoc_mul_table=rebuild(inst.mul, p_assoc, p_assoc, inv_assoc, inst.dim_a),
        action_table=rebuild(inst.act, p_assoc, p_lie, inv_lie, inst.dim_l),
        anchor_table=rebuild(inst.anchor_apply, p_lie, p_assoc, inv_assoc, inst.dim_a),
    )


FIXTURE_BUILDERS: dict[str, Callable[[], SplitLieRinehartInstance]] = {
    "F_SL2": _build_sl2,
    "F_SL2SL2": lambda: replace(direct_sum(_build_sl2(), _build_sl2()), name="F_SL2SL2"),
    "F_TRUNC3": lambda: _build_trunc(3),
    "F_TRUNC4": lambda: _build_trunc(4),
    "F_GL2N": _build_gl2n,
}


def fixture_names() -> list[str]:
    return list(FIXTURE_BUILDERS)


def fixture(name: str) -> SplitLieRinehartInstance:
    try:
        builder = FIXTURE_BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_BUILDERS)}")
    return builder()
