"""JSON operator-set documents: ingestion and serialization.

A document is a UTF-8 JSON object with an integer ``dim``, optional
tolerance overrides ``eps_rank`` / ``eps_entry`` / ``eps_subspace``, and
exactly one of two payloads:

* ``"contexts"``: object mapping a context name to an array of dim x dim
  matrices, each matrix an array of rows, each entry a two-element
  ``[re, im]`` array. Matrices are taken literally, never modified.
* ``"rays"`` plus ``"groups"``: ``rays`` maps a ray name to a dim-entry
  vector (same ``[re, im]`` encoding); ``groups`` maps a context name to an
  array of ray names. Rays are directions: they are normalized and turned
  into rank-1 projectors, and every group must form an orthonormal basis.
"""
from __future__ import annotations

import json
from numbers import Real

import numpy as np

from .errors import ParseError, ValidationError
from .projectors import (
    ContextCollection,
    context_from_basis,
    validate_context,
    validate_projector,
)
from .tolerance import TolerancePolicy

TOLERANCE_FIELDS = ("eps_rank", "eps_entry", "eps_subspace")


def _parse_complex(entry, where: str) -> complex:
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(part, Real) for part in entry)
    ):
        raise ParseError(f"{where}: expected a [re, im] number pair, got {entry!r}")
    value = complex(entry[0], entry[1])
    if not np.isfinite(value):
        raise ParseError(f"{where}: entries must be finite")
    return value


def _parse_vector(obj, dim: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != dim:
        raise ParseError(f"{where}: expected a vector of {dim} [re, im] pairs")
    return np.array(
        [_parse_complex(entry, f"{where}[{i}]") for i, entry in enumerate(obj)]
    )


def _parse_matrix(obj, dim: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != dim:
        raise ParseError(f"{where}: expected a {dim}x{dim} matrix as {dim} rows")
    return np.array(
        [
            [
                _parse_complex(entry, f"{where}[{r}][{c}]")
                for c, entry in enumerate(_expect_row(row, dim, f"{where}[{r}]"))
            ]
            for r, row in enumerate(obj)
        ]
    )


def _expect_row(row, dim: int, where: str) -> list:
    if not isinstance(row, list) or len(row) != dim:
        raise ParseError(f"{where}: expected a row of {dim} [re, im] pairs")
    return row


def _parse_tolerances(data: dict, overrides: dict | None) -> TolerancePolicy:
    fields = {}
    for key in TOLERANCE_FIELDS:
        if key in data:
            if not isinstance(data[key], Real):
                raise ParseError(f"{key!r} must be a number")
            fields[key] = float(data[key])
    if overrides:
        fields.update({k: float(v) for k, v in overrides.items() if v is not None})
    try:
        return TolerancePolicy(**fields)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_document(
    data, tol_overrides: dict | None = None
) -> tuple[ContextCollection, TolerancePolicy]:
    """Build a validated collection from a decoded document object.

    ``tol_overrides`` (e.g. CLI flags) take precedence over the document's
    own tolerance fields. Raises ``ParseError`` for malformed documents and
    ``ValidationError`` (with the context name and residual) when the
    operators fail their axioms.
    """
    if not isinstance(data, dict):
        raise ParseError("document root must be a JSON object")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("'dim' must be a positive integer")
    tol = _parse_tolerances(data, tol_overrides)

    has_contexts = "contexts" in data
    has_rays = "rays" in data or "groups" in data
    if has_contexts == has_rays:
        raise ParseError("document must contain exactly one of 'contexts' or 'rays'+'groups'")

    if has_contexts:
        contexts_obj = data["contexts"]
        if not isinstance(contexts_obj, dict) or not contexts_obj:
            raise ParseError("'contexts' must be a non-empty object")
        contexts = []
        for name, matrices in contexts_obj.items():
            if not isinstance(matrices, list) or not matrices:
                raise ParseError(f"context {name!r} must be a non-empty array of matrices")
            members = [
                validate_projector(
                    _parse_matrix(matrix, dim, f"contexts[{name}][{i}]"),
                    tol,
                    label=f"{name}[{i}]",
                )
                for i, matrix in enumerate(matrices)
            ]
            contexts.append(validate_context(members, tol, name=name))
        return ContextCollection(contexts, tol), tol

    rays_obj = data.get("rays")
    groups_obj = data.get("groups")
    if not isinstance(rays_obj, dict) or not rays_obj:
        raise ParseError("'rays' must be a non-empty object")
    if not isinstance(groups_obj, dict) or not groups_obj:
        raise ParseError("'groups' must be a non-empty object")
    rays = {}
    for name, vector in rays_obj.items():
        arr = _parse_vector(vector, dim, f"rays[{name}]")
        norm = float(np.linalg.norm(arr))
        if norm == 0.0:
            raise ValidationError(f"ray {name!r} has zero norm")
        rays[name] = arr / norm
    contexts = []
    for group_name, ray_names in groups_obj.items():
        if not isinstance(ray_names, list) or not ray_names:
            raise ParseError(f"group {group_name!r} must be a non-empty array of ray names")
        for ray_name in ray_names:
            if ray_name not in rays:
                raise ParseError(f"group {group_name!r} references unknown ray {ray_name!r}")
        contexts.append(
            context_from_basis(
                [rays[ray_name] for ray_name in ray_names],
                tol,
                name=group_name,
                labels=list(ray_names),
            )
        )
    return ContextCollection(contexts, tol), tol


def load_document(
    path, tol_overrides: dict | None = None
) -> tuple[ContextCollection, TolerancePolicy]:
    """Read and parse a document file."""
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return parse_document(data, tol_overrides)


def complex_to_json(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def matrix_to_json(matrix) -> list[list[list[float]]]:
    arr = np.asarray(matrix, dtype=complex)
    return [[complex_to_json(entry) for entry in row] for row in arr]


def vector_to_json(vector) -> list[list[float]]:
    return [complex_to_json(entry) for entry in np.asarray(vector, dtype=complex)]


def collection_to_document(
    collection: ContextCollection, tol: TolerancePolicy | None = None
) -> dict:
    """Serialize a collection in matrix form; parsing it back reproduces the
    same matrices bit-for-bit (JSON floats round-trip exactly)."""
    doc: dict = {"dim": collection.ambient_dim}
    if tol is not None:
        doc["eps_rank"] = tol.eps_rank
        doc["eps_entry"] = tol.eps_entry
        doc["eps_subspace"] = tol.eps_subspace
    doc["contexts"] = {
        ctx.name: [matrix_to_json(p.matrix) for p in ctx.members]
        for ctx in collection.contexts
    }
    return doc


def save_document(
    collection: ContextCollection, path, tol: TolerancePolicy | None = None
) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(collection_to_document(collection, tol), handle, indent=2)
        handle.write("\n")
