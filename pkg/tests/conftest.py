import numpy as np
import pytest

import projlat as pl

# The classic 18-ray, 9-context configuration in dimension 4: every group is
# an orthogonal basis and every ray appears in exactly two groups, which is
# what forces the assignment search to fail.
KS18_GROUPS = [
    [(0, 0, 0, 1), (0, 0, 1, 0), (1, 1, 0, 0), (1, -1, 0, 0)],
    [(0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 1, 0), (1, 0, -1, 0)],
    [(1, -1, 1, -1), (1, -1, -1, 1), (1, 1, 0, 0), (0, 0, 1, 1)],
    [(1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, 0), (0, 1, 0, -1)],
    [(0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 0, -1)],
    [(1, -1, -1, 1), (1, 1, 1, 1), (1, 0, 0, -1), (0, 1, -1, 0)],
    [(1, 1, -1, 1), (1, 1, 1, -1), (1, -1, 0, 0), (0, 0, 1, 1)],
    [(1, 1, -1, 1), (-1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, -1)],
    [(1, 1, 1, -1), (-1, 1, 1, 1), (1, 0, 0, 1), (0, 1, -1, 0)],
]


def ks18_ray_names() -> dict[tuple, str]:
    names = {}
    for group in KS18_GROUPS:
        for ray in group:
            if ray not in names:
                names[ray] = f"r{len(names):02d}"
    return names


def ks18_document() -> dict:
    names = ks18_ray_names()
    return {
        "dim": 4,
        "rays": {
            name: [[float(x), 0.0] for x in ray] for ray, name in names.items()
        },
        "groups": {
            f"c{gi}": [names[ray] for ray in group]
            for gi, group in enumerate(KS18_GROUPS)
        },
    }


def ks18_collection() -> pl.ContextCollection:
    collection, _ = pl.parse_document(ks18_document())
    return collection


def random_rank1_context(rng, dim: int, name: str = "ctx") -> pl.MaximalContext:
    """Maximal context from a Haar-ish random orthonormal basis of C^dim."""
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, _ = np.linalg.qr(z)
    return pl.context_from_basis([q[:, i] for i in range(dim)], name=name)


def random_projector(rng, dim: int, rank: int, label: str = "P") -> pl.Projector:
    z = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    q, _ = np.linalg.qr(z)
    return pl.validate_projector(q @ q.conj().T, label=label)


def random_state(rng, dim: int) -> np.ndarray:
    return rng.normal(size=dim) + 1j * rng.normal(size=dim)


@pytest.fixture(scope="session")
def pauli() -> pl.ContextCollection:
    return pl.pauli_contexts()


@pytest.fixture(scope="session")
def ks18() -> pl.ContextCollection:
    return ks18_collection()
