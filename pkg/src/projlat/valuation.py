"""State-dependent bivaluation and the global 0/1 assignment search.

The valuation of a projector at a state is deliberately partial: it is 1
when the state lies in the range, 0 when it lies in the kernel, and
undefined otherwise. Per context this yields at most one member valued 1;
when every member is defined the values sum to exactly 1.

Independently of any state, the assignment search decides whether the
projector identities of a collection admit a global 0/1 labelling with
exactly one 1 per context. Identities are registry identities, so a
projector shared by several contexts is constrained by all of them; that
sharing is what can make the search unsatisfiable.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, ZeroStateError
from .projectors import ContextCollection, MaximalContext, Projector
from .tolerance import TolerancePolicy, resolve


class TruthValue(enum.Enum):
    ZERO = 0
    ONE = 1
    UNDEFINED = None

    def __str__(self) -> str:
        return "undefined" if self is TruthValue.UNDEFINED else str(self.value)


def valuate(
    state, projector: Projector, tol: TolerancePolicy | None = None
) -> TruthValue:
    """Partial truth value of a projector at a nonzero state.

    ONE when ``|P psi - psi| <= eps_entry |psi|``, ZERO when
    ``|P psi| <= eps_entry |psi|``, UNDEFINED otherwise. Both thresholds
    scale with the state norm, so the value is phase- and scale-invariant.
    """
    tol = resolve(tol)
    psi = linalg.as_state_vector(state)
    if psi.shape[0] != projector.ambient_dim:
        raise DimensionMismatchError(
            f"state dimension {psi.shape[0]} != ambient {projector.ambient_dim}"
        )
    norm = float(np.linalg.norm(psi))
    if norm == 0.0:
        raise ZeroStateError()
    image = projector.matrix @ psi
    if float(np.linalg.norm(image - psi)) <= tol.eps_entry * norm:
        return TruthValue.ONE
    if float(np.linalg.norm(image)) <= tol.eps_entry * norm:
        return TruthValue.ZERO
    return TruthValue.UNDEFINED


@dataclass(frozen=True)
class ContextValuation:
    """Per-member truth values of one context at one state."""

    context_name: str
    values: tuple[TruthValue, ...]

    @property
    def bivalent(self) -> bool:
        return TruthValue.UNDEFINED not in self.values

    @property
    def total(self) -> int | None:
        """Sum of the member values; absent when any value is undefined."""
        if not self.bivalent:
            return None
        return sum(v.value for v in self.values)


def valuate_context(
    state, ctx: MaximalContext, tol: TolerancePolicy | None = None
) -> ContextValuation:
    """Valuate every member of a context at the state."""
    return ContextValuation(
        context_name=ctx.name,
        values=tuple(valuate(state, p, tol) for p in ctx.members),
    )


@dataclass(frozen=True)
class BivalenceReport:
    """Valuation of a whole collection at one state, by registry identity."""

    values: tuple[TruthValue, ...]
    undefined_labels: tuple[str, ...]
    context_valuations: tuple[ContextValuation, ...]

    @property
    def bivalent(self) -> bool:
        return not self.undefined_labels


def bivalence_report(
    state, collection: ContextCollection, tol: TolerancePolicy | None = None
) -> BivalenceReport:
    """Valuate every registry identity; list the ones left undefined."""
    values = tuple(
        valuate(state, entry.projector, tol) for entry in collection.registry
    )
    undefined = tuple(
        entry.projector.label
        for entry, value in zip(collection.registry, values)
        if value is TruthValue.UNDEFINED
    )
    per_context = tuple(
        valuate_context(state, ctx, tol) for ctx in collection.contexts
    )
    return BivalenceReport(
        values=values,
        undefined_labels=undefined,
        context_valuations=per_context,
    )


@dataclass(frozen=True)
class AssignmentSearchResult:
    satisfiable: bool
    assignment: dict[int, int] | None
    nodes_explored: int

    @property
    def status(self) -> str:
        return "SAT" if self.satisfiable else "UNSAT"


def search_noncontextual_assignment(
    collection: ContextCollection,
) -> AssignmentSearchResult:
    """Decide whether registry identities admit a one-1-per-context labelling.

    Chronological backtracking over contexts in input order; within a
    context the 1-position is tried in ascending member index, and shared
    identities are checked immediately, so the first success is the
    lexicographically smallest satisfying assignment under that ordering.
    On failure the node count certifies the exhaustion. Single-threaded and
    deterministic by construction.
    """
    context_ids = [
        [collection.identity_of(ci, mi) for mi in range(len(ctx.members))]
        for ci, ctx in enumerate(collection.contexts)
    ]
    assignment: dict[int, int] = {}
    nodes = 0

    def try_context(ids: list[int], one_position: int) -> list[int] | None:
        """Assign the one-hot pattern; return newly-set ids, or None on conflict."""
        wanted = {}
        for pos, identity in enumerate(ids):
            value = 1 if pos == one_position else 0
            if wanted.get(identity, value) != value:
                return None
            wanted[identity] = value
        for identity, value in wanted.items():
            if assignment.get(identity, value) != value:
                return None
        fresh = [identity for identity in wanted if identity not in assignment]
        for identity in fresh:
            assignment[identity] = wanted[identity]
        return fresh

    def backtrack(level: int) -> bool:
        nonlocal nodes
        if level == len(context_ids):
            return True
        ids = context_ids[level]
        for pos in range(len(ids)):
            nodes += 1
            fresh = try_context(ids, pos)
            if fresh is None:
                continue
            if backtrack(level + 1):
                return True
            for identity in fresh:
                del assignment[identity]
        return False

    if backtrack(0):
        return AssignmentSearchResult(
            satisfiable=True,
            assignment=dict(sorted(assignment.items())),
            nodes_explored=nodes,
        )
    return AssignmentSearchResult(satisfiable=False, assignment=None, nodes_explored=nodes)
