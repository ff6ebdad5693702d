"""Generated operator algebras and the irreducibility decision.

The decision procedure is dimension saturation: the unital algebra generated
by a set of operators on C^n equals the full n^2-dimensional algebra of
linear maps exactly when the generators admit no nontrivial common invariant
subspace (over the complex field). The closure is computed by span-growing:
orthonormalize the generators (plus the identity) under the trace inner
product, adjoin all pairwise products, and repeat until the dimension stops
growing.

A complementary best-effort search produces an explicit common invariant
subspace as a witness when the algebra is not saturated. The search is
incomplete in principle, so its empty-handed outcome is never used to claim
irreducibility; saturation is the authoritative negative. Inputs are treated
as complex: real matrices are embedded into C^(n x n), since the saturation
criterion is specific to the complex field.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import AmbientDimOneError, DimensionMismatchError, SearchCapExceededError
from .projectors import Projector, is_invariant
from .subspace import Subspace
from .tolerance import TolerancePolicy, resolve

DEFAULT_WITNESS_CAP = 6


@dataclass(frozen=True)
class AlgebraClosure:
    """Orthonormal basis (trace inner product) of a generated unital algebra."""

    ambient_dim: int
    basis: tuple[np.ndarray, ...]
    dimension: int
    generations: int
    saturated: bool


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    algebra_dimension: int
    witness: Subspace | None


def _coerce_generators(generators) -> list[np.ndarray]:
    mats = []
    for g in generators:
        arr = linalg.as_complex_matrix(g.matrix if isinstance(g, Projector) else g)
        if arr.shape[0] != arr.shape[1]:
            raise DimensionMismatchError(f"generators must be square, got {arr.shape}")
        mats.append(arr)
    if not mats:
        raise ValueError("need at least one generator")
    dim = mats[0].shape[0]
    for arr in mats[1:]:
        if arr.shape[0] != dim:
            raise DimensionMismatchError(
                f"mixed generator dimensions: {dim} and {arr.shape[0]}"
            )
    return mats


def algebra_closure(
    generators, tol: TolerancePolicy | None = None
) -> AlgebraClosure:
    """Span closure of the unital algebra generated by ``generators``.

    The identity is always adjoined. Each pass forms all pairwise products
    of the current basis and re-orthonormalizes; the dimension grows strictly
    until stable, so the loop terminates within n^2 passes. Basis order is
    fixed by generation-then-index, making the result deterministic.
    """
    mats = _coerce_generators(generators)
    n = mats[0].shape[0]
    seed = [np.eye(n, dtype=complex)] + mats
    basis = linalg.orthonormalize([m.reshape(-1) for m in seed], tol)
    generations = 0
    while True:
        generations += 1
        square = [v.reshape(n, n) for v in basis]
        products = [(a @ b).reshape(-1) for a in square for b in square]
        grown = linalg.orthonormalize(basis + products, tol)
        if len(grown) == len(basis):
            break
        basis = grown
    matrices = []
    for v in basis:
        m = v.reshape(n, n)
        m.setflags(write=False)
        matrices.append(m)
    return AlgebraClosure(
        ambient_dim=n,
        basis=tuple(matrices),
        dimension=len(matrices),
        generations=generations,
        saturated=len(matrices) == n * n,
    )


def invariant_subspace_witness(
    generators,
    tol: TolerancePolicy | None = None,
    dimension_cap: int = DEFAULT_WITNESS_CAP,
) -> Subspace | None:
    """Best-effort search for a nontrivial common invariant subspace.

    Takes the fixed combination ``1*G_1 + 2*G_2 + ...`` of the generators,
    orders its eigenvalues descending by (real, imaginary) part, and tests
    sums of eigenvalue-cluster eigenspaces for invariance under every
    generator, falling back to spans of individual eigenvector subsets.
    Returns the first hit in that fixed order, or ``None``; an empty result
    is advisory only.
    """
    tol = resolve(tol)
    mats = _coerce_generators(generators)
    n = mats[0].shape[0]
    if n > dimension_cap:
        raise SearchCapExceededError(n, dimension_cap)
    combo = sum((k + 1) * m for k, m in enumerate(mats))
    if linalg.max_abs(combo - combo.conj().T) <= tol.eps_entry:
        values, vectors = np.linalg.eigh(combo)
        values = values.astype(complex)
    else:
        values, vectors = np.linalg.eig(combo)
    order = np.lexsort((-values.imag, -values.real))
    values = values[order]
    vectors = vectors[:, order]

    scale = max(1.0, float(np.max(np.abs(values))))
    clusters: list[list[int]] = []
    for idx, lam in enumerate(values):
        if clusters and abs(lam - values[clusters[-1][0]]) <= tol.eps_subspace * scale:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])

    def candidate(indices: list[int]) -> Subspace | None:
        sub = Subspace.from_span([vectors[:, i] for i in indices], ambient_dim=n, tol=tol)
        if 0 < sub.dim < n and all(is_invariant(sub, m, tol) for m in mats):
            return sub
        return None

    k = len(clusters)
    for mask in range(1, (1 << k) - 1):
        indices = [i for c in range(k) if mask >> c & 1 for i in clusters[c]]
        found = candidate(indices)
        if found is not None:
            return found
    if k < n:
        for mask in range(1, (1 << n) - 1):
            found = candidate([i for i in range(n) if mask >> i & 1])
            if found is not None:
                return found
    return None


def is_irreducible(
    generators,
    tol: TolerancePolicy | None = None,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> IrreducibilityReport:
    """Decide irreducibility by algebra saturation; attach a witness if found.

    Irreducible means the generated unital algebra has dimension n^2. When it
    does not, and the ambient dimension is within ``witness_cap``, an explicit
    nontrivial common invariant subspace is searched for and attached.
    """
    mats = _coerce_generators(generators)
    n = mats[0].shape[0]
    if n == 1:
        raise AmbientDimOneError()
    closure = algebra_closure(mats, tol)
    witness = None
    if not closure.saturated and n <= witness_cap:
        witness = invariant_subspace_witness(mats, tol, dimension_cap=witness_cap)
    return IrreducibilityReport(
        irreducible=closure.saturated,
        algebra_dimension=closure.dimension,
        witness=witness,
    )
