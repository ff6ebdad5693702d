"""Dense complex linear algebra primitives.

Everything downstream (subspaces, lattices, algebra closure) is built on the
handful of operations here, so they follow one discipline: inputs are coerced
to fresh ``complex128`` arrays, rank decisions use a relative singular-value
threshold, and results are deterministic for a fixed input order.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .errors import DimensionMismatchError, NotSquareError, ValidationError
from .tolerance import TolerancePolicy, resolve


def as_complex_matrix(matrix) -> np.ndarray:
    """Coerce to a finite 2-D complex128 array (always a fresh copy)."""
    arr = np.array(matrix, dtype=np.complex128)
    if arr.ndim != 2:
        raise ValidationError(f"expected a 2-D matrix, got {arr.ndim} dimension(s)")
    if arr.size and not np.isfinite(arr).all():
        raise ValidationError("matrix entries must be finite")
    return arr


def as_state_vector(vector) -> np.ndarray:
    """Coerce to a finite 1-D complex128 array (always a fresh copy)."""
    arr = np.array(vector, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValidationError(f"expected a 1-D vector, got {arr.ndim} dimension(s)")
    if arr.size and not np.isfinite(arr).all():
        raise ValidationError("vector entries must be finite")
    return arr


def adjoint(matrix) -> np.ndarray:
    """Conjugate transpose."""
    return as_complex_matrix(matrix).conj().T.copy()


def multiply(a, b) -> np.ndarray:
    """Matrix product, with an explicit shape check."""
    left = as_complex_matrix(a)
    right = as_complex_matrix(b)
    if left.shape[1] != right.shape[0]:
        raise DimensionMismatchError(
            f"cannot multiply shapes {left.shape} and {right.shape}"
        )
    return left @ right


def max_abs(matrix) -> float:
    """Largest entry magnitude; 0.0 for an empty array."""
    arr = np.asarray(matrix)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def orthonormalize(
    vectors: Iterable, tol: TolerancePolicy | None = None
) -> list[np.ndarray]:
    """Orthonormal basis of the span of ``vectors``, deterministic in input order.

    Modified Gram-Schmidt with a second reorthogonalization pass. A vector
    whose residual norm after projection is at most ``eps_rank`` times the
    largest input norm is treated as dependent and dropped, so the output
    size equals the numerical rank of the span.
    """
    tol = resolve(tol)
    vecs = [as_state_vector(v) for v in vectors]
    if not vecs:
        return []
    dim = vecs[0].shape[0]
    for v in vecs[1:]:
        if v.shape[0] != dim:
            raise DimensionMismatchError(
                f"mixed vector dimensions: {dim} and {v.shape[0]}"
            )
    scale = max(float(np.linalg.norm(v)) for v in vecs)
    if scale == 0.0:
        return []
    cutoff = tol.eps_rank * scale
    basis: list[np.ndarray] = []
    for v in vecs:
        w = v.copy()
        for _ in range(2):
            for b in basis:
                w -= (b.conj() @ w) * b
        norm = float(np.linalg.norm(w))
        if norm > cutoff:
            basis.append(w / norm)
    return basis


def singular_rank(singular_values, tol: TolerancePolicy | None = None) -> int:
    """Count of singular values above the rank threshold.

    The threshold is ``eps_rank`` times the largest singular value, floored
    at ``eps_rank`` itself so that a matrix consisting of pure roundoff noise
    counts as zero instead of as full rank.
    """
    tol = resolve(tol)
    s = np.asarray(singular_values, dtype=float)
    if s.size == 0 or s[0] <= 0.0:
        return 0
    return int(np.count_nonzero(s > tol.eps_rank * max(s[0], 1.0)))


def numerical_rank(matrix, tol: TolerancePolicy | None = None) -> int:
    """Numerical rank by singular-value thresholding; the zero matrix has rank 0."""
    arr = as_complex_matrix(matrix)
    if arr.size == 0:
        return 0
    return singular_rank(np.linalg.svd(arr, compute_uv=False), tol)


def kernel_basis(matrix, tol: TolerancePolicy | None = None) -> list[np.ndarray]:
    """Orthonormal kernel basis of a (possibly rectangular) matrix via SVD."""
    arr = as_complex_matrix(matrix)
    _, s, vh = np.linalg.svd(arr)
    rank = singular_rank(s, tol)
    return [vh[i].conj() for i in range(rank, arr.shape[1])]


def nullspace(matrix, tol: TolerancePolicy | None = None) -> list[np.ndarray]:
    """Orthonormal basis of the null space of a square matrix.

    The basis spans exactly the vectors ``v`` with ``|M v|`` below the rank
    threshold relative to the largest singular value; its size is the matrix
    dimension minus the numerical rank.
    """
    arr = as_complex_matrix(matrix)
    if arr.shape[0] != arr.shape[1]:
        raise NotSquareError(arr.shape)
    return kernel_basis(arr, tol)


def range_basis(matrix, tol: TolerancePolicy | None = None) -> list[np.ndarray]:
    """Orthonormal basis of the column space via SVD."""
    arr = as_complex_matrix(matrix)
    u, s, _ = np.linalg.svd(arr)
    rank = singular_rank(s, tol)
    return [u[:, i] for i in range(rank)]
