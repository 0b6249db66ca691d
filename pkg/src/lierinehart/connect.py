"""Connection relations among roots and among weights.

Two nonzero roots are connected when one is plus-or-minus the other, or
when a finite chain of roots/weights, starting at the first root and with
every intermediate partial sum again a (plus-or-minus) root, totals to
plus-or-minus the second.  For weights the scheme is the same except that
intermediate partial sums may wander through the union of signed weights
and signed roots.

Connectivity is computed as a breadth-first set closure over the finite
signed label sets rather than by literal chain enumeration; each reached
label keeps the chain of steps that produced it, so every answer carries
a replayable witness.  Both relations are equivalence relations; the
implementation re-checks that on its own output and raises on violation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import Functional, InternalConsistencyError, SplitLieRinehartInstance

Chain = tuple[Functional, ...]
ReachMap = dict[Functional, Chain]


def _signed(labels) -> set[Functional]:
    out: set[Functional] = set()
    for f in labels:
        out.add(f)
        out.add(-f)
    return out


def _reachable(start: Functional, states: set[Functional], steps: set[Functional]) -> ReachMap:
    """Smallest subset of `states` containing `start` and closed under adding
    a step while staying in `states`; values are the witnessing chains."""
    chains: ReachMap = {start: (start,)}
    queue: deque[Functional] = deque([start])
    ordered_steps = sorted(steps)
    while queue:
        s = queue.popleft()
        for z in ordered_steps:
            t = s + z
            if t in states and t not in chains:
                chains[t] = chains[s] + (z,)
                queue.append(t)
    return chains


def root_reachable_set(inst: SplitLieRinehartInstance, gamma: Functional) -> ReachMap:
    """Signed roots reachable from `gamma` through chains whose partial sums
    stay among the signed roots; maps each one to its chain of steps."""
    roots = set(inst.lie.labels)
    if gamma not in roots:
        raise ValueError(f"{gamma} is not a root of {inst.name}")
    states = _signed(roots)
    steps = states | _signed(inst.assoc.labels)
    return _reachable(gamma, states, steps)


def weight_reachable_set(inst: SplitLieRinehartInstance, alpha: Functional) -> ReachMap:
    """Same closure for weights; here partial sums may visit signed weights
    and signed roots alike."""
    weights = set(inst.assoc.labels)
    if alpha not in weights:
        raise ValueError(f"{alpha} is not a weight of {inst.name}")
    states = _signed(weights) | _signed(inst.lie.labels)
    return _reachable(alpha, states, states)


def _connected(reach: ReachMap, source: Functional, target: Functional) -> Chain | None:
    if target == source or target == -source:
        return (source,)
    if target in reach:
        return reach[target]
    if -target in reach:
        return reach[-target]
    return None


def roots_connected(
    inst: SplitLieRinehartInstance, gamma: Functional, xi: Functional
) -> tuple[bool, Chain | None]:
    """Whether gamma and xi are connected roots, with a witness chain."""
    roots = set(inst.lie.labels)
    for f in (gamma, xi):
        if f not in roots:
            raise ValueError(f"{f} is not a root of {inst.name}")
    chain = _connected(root_reachable_set(inst, gamma), gamma, xi)
    return (chain is not None), chain


def weights_connected(
    inst: SplitLieRinehartInstance, alpha: Functional, beta: Functional
) -> tuple[bool, Chain | None]:
    """Whether alpha and beta are connected weights, with a witness chain."""
    weights = set(inst.assoc.labels)
    for f in (alpha, beta):
        if f not in weights:
            raise ValueError(f"{f} is not a weight of {inst.name}")
    chain = _connected(weight_reachable_set(inst, alpha), alpha, beta)
    return (chain is not None), chain


@dataclass(frozen=True)
class ConnectionClass:
    """An equivalence class of roots or weights, with witness chains from
    the (lexicographically least) representative to every member."""

    kind: str  # "root" | "weight"
    members: tuple[Functional, ...]
    witnesses: tuple[tuple[Functional, Chain], ...]

    @property
    def representative(self) -> Functional:
        return self.members[0]

    @property
    def member_set(self) -> frozenset[Functional]:
        return frozenset(self.members)

    def witness_for(self, member: Functional) -> Chain:
        for f, chain in self.witnesses:
            if f == member:
                return chain
        raise KeyError(f"{member} is not in this class")


def _classes(kind: str, labels, reach_fn) -> tuple[ConnectionClass, ...]:
    ordered = sorted(labels)
    remaining = set(ordered)
    classes: list[ConnectionClass] = []
    for rep in ordered:
        if rep not in remaining:
            continue
        reach = reach_fn(rep)
        members = tuple(f for f in ordered if _connected(reach, rep, f) is not None)
        witnesses = tuple((f, _connected(reach, rep, f)) for f in members)
        classes.append(ConnectionClass(kind, members, witnesses))
        remaining -= set(members)
    return tuple(classes)


def _assert_equivalence(labels, connected_fn, what: str) -> None:
    ordered = sorted(labels)
    conn = {
        (a, b): connected_fn(a, b)[0] for a in ordered for b in ordered
    }
    for a in ordered:
        if not conn[(a, a)]:
            raise InternalConsistencyError(f"{what} relation is not reflexive at {a}")
        for b in ordered:
            if conn[(a, b)] != conn[(b, a)]:
                raise InternalConsistencyError(f"{what} relation is not symmetric at ({a},{b})")
            for c in ordered:
                if conn[(a, b)] and conn[(b, c)] and not conn[(a, c)]:
                    raise InternalConsistencyError(
                        f"{what} relation is not transitive at ({a},{b},{c})"
                    )


def root_classes(inst: SplitLieRinehartInstance) -> tuple[ConnectionClass, ...]:
    """Partition of the root system into connection classes.

    The relation is provably an equivalence; this function still re-checks
    reflexivity, symmetry and transitivity on the computed verdicts and
    raises InternalConsistencyError if any fails.
    """
    _assert_equivalence(inst.lie.labels, lambda a, b: roots_connected(inst, a, b), "root")
    return _classes("root", inst.lie.labels, lambda rep: root_reachable_set(inst, rep))


def weight_classes(inst: SplitLieRinehartInstance) -> tuple[ConnectionClass, ...]:
    """Partition of the weight system into connection classes (see
    :func:`root_classes` for the self-check)."""
    _assert_equivalence(inst.assoc.labels, lambda a, b: weights_connected(inst, a, b), "weight")
    return _classes("weight", inst.assoc.labels, lambda rep: weight_reachable_set(inst, rep))
