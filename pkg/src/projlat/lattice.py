"""Finite invariant-subspace families and their intersection.

For a single projector the family has (at most) four elements: the zero
subspace, the range, the kernel, and the whole space. For a maximal context
the family consists of the ranges of all subset sums of its members; with
``m`` members and distinct subset sums that is the Boolean lattice of 2^m
elements. Intersecting the families of several contexts keeps exactly the
subspaces invariant under every context; when only the zero subspace and the
whole space survive, the family is trivial.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, SubsetLimitExceededError
from .projectors import MaximalContext, Projector, is_invariant
from .subspace import Subspace
from .tolerance import TolerancePolicy

DEFAULT_MEMBER_CAP = 20


@dataclass(frozen=True)
class LatticeFamily:
    """A deduplicated family of subspaces with reporting labels.

    Always contains the zero subspace and the full space; no two elements
    are equal within ``eps_subspace``. Element order is construction order
    with the first-constructed representative kept on deduplication.
    """

    ambient_dim: int
    elements: tuple[Subspace, ...]
    labels: tuple[str, ...]

    def is_trivial(self) -> bool:
        """True when the family is exactly {zero subspace, full space}."""
        return sorted(s.dim for s in self.elements) == [0, self.ambient_dim]

    def contains(self, subspace: Subspace, tol: TolerancePolicy | None = None) -> bool:
        return any(el.equals(subspace, tol) for el in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _dedup(
    pairs: list[tuple[Subspace, str]], ambient_dim: int, tol: TolerancePolicy | None
) -> LatticeFamily:
    elements: list[Subspace] = []
    labels: list[str] = []
    for sub, label in pairs:
        if not any(sub.equals(seen, tol) for seen in elements):
            elements.append(sub)
            labels.append(label)
    return LatticeFamily(ambient_dim, tuple(elements), tuple(labels))


def projector_lattice(
    projector: Projector, tol: TolerancePolicy | None = None
) -> LatticeFamily:
    """The four-element invariant family of one projector (deduplicated)."""
    n = projector.ambient_dim
    pairs = [
        (Subspace.zero(n), "ran(0)"),
        (projector.range(tol), f"ran({projector.label})"),
        (projector.kernel(tol), f"ker({projector.label})"),
        (Subspace.full(n), "ran(1)"),
    ]
    return _dedup(pairs, n, tol)


def context_lattice(
    ctx: MaximalContext,
    tol: TolerancePolicy | None = None,
    member_cap: int = DEFAULT_MEMBER_CAP,
) -> LatticeFamily:
    """Ranges of all subset sums of a context's members.

    Subsets are enumerated by ascending bitmask (bit ``i`` selects member
    ``i``), which fixes the element order; the empty subset yields the zero
    subspace and the full subset the whole space. Contexts with more than
    ``member_cap`` members are rejected to bound the 2^m enumeration.
    """
    m = len(ctx.members)
    if m > member_cap:
        raise SubsetLimitExceededError(m, member_cap)
    n = ctx.ambient_dim
    pairs: list[tuple[Subspace, str]] = []
    for mask in range(1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        if not chosen:
            pairs.append((Subspace.zero(n), "ran(0)"))
            continue
        if len(chosen) == m:
            label = "ran(1)"
        else:
            label = "ran(" + "+".join(ctx.members[i].label for i in chosen) + ")"
        total = sum(ctx.members[i].matrix for i in chosen)
        pairs.append((Subspace.column_space(total, tol), label))
    return _dedup(pairs, n, tol)


def intersect_lattices(
    families, tol: TolerancePolicy | None = None
) -> LatticeFamily:
    """Elements present (within ``eps_subspace``) in every input family.

    Keeps the first family's order and labels. The zero subspace and the
    full space are members of every family, so they always survive.
    """
    fams = list(families)
    if not fams:
        raise ValueError("need at least one lattice family to intersect")
    n = fams[0].ambient_dim
    for fam in fams[1:]:
        if fam.ambient_dim != n:
            raise DimensionMismatchError(
                f"mixed ambient dimensions: {n} and {fam.ambient_dim}"
            )
    pairs = [
        (el, label)
        for el, label in zip(fams[0].elements, fams[0].labels)
        if all(fam.contains(el, tol) for fam in fams[1:])
    ]
    return _dedup(pairs, n, tol)


def is_closed_under_meet_join(
    family: LatticeFamily, tol: TolerancePolicy | None = None
) -> bool:
    """Verification pass: every pairwise meet and join is again a member."""
    for i, u in enumerate(family.elements):
        for v in family.elements[i:]:
            if not family.contains(u.meet(v, tol), tol):
                return False
            if not family.contains(u.join(v, tol), tol):
                return False
    return True


def all_elements_invariant(
    family: LatticeFamily, ctx: MaximalContext, tol: TolerancePolicy | None = None
) -> bool:
    """Verification pass: every element is invariant under every member."""
    return all(
        is_invariant(el, member, tol)
        for el in family.elements
        for member in ctx.members
    )
