import numpy as np
import pytest

import projlat as pl
from conftest import random_projector, random_rank1_context
from projlat import Subspace

I2 = np.eye(2)
P1Z = np.array([[1, 0], [0, 0]], dtype=complex)
P1X = 0.5 * np.array([[1, 1], [1, 1]], dtype=complex)


class TestValidateProjector:
    def test_rank_one_projector(self):
        p = pl.validate_projector(P1X, label="P1_x")
        assert p.rank == 1
        assert p.label == "P1_x"
        assert np.array_equal(p.matrix, P1X)

    def test_identity_is_rank_two(self):
        assert pl.validate_projector(I2).rank == 2

    def test_half_identity_is_not_idempotent(self):
        with pytest.raises(pl.NotIdempotentError) as excinfo:
            pl.validate_projector(0.5 * I2)
        assert excinfo.value.residual == pytest.approx(0.25)

    def test_non_hermitian_rejected(self):
        with pytest.raises(pl.NotHermitianError):
            pl.validate_projector([[0, 1], [0, 0]])

    def test_non_square_rejected(self):
        with pytest.raises(pl.NotSquareError):
            pl.validate_projector(np.ones((2, 3)))

    def test_matrix_is_stored_as_given(self):
        noisy = P1X + 1e-11  # within tolerance, must not be cleaned up
        p = pl.validate_projector(noisy)
        assert np.array_equal(p.matrix, noisy)


class TestRangeAndKernel:
    def test_range_of_z_projector(self):
        p = pl.validate_projector(P1Z)
        assert p.range().equals(Subspace.from_span([[1, 0]]))

    def test_range_of_identity_is_everything(self):
        assert pl.validate_projector(I2).range().is_full()

    def test_range_of_y_projector(self):
        p = pl.validate_projector(0.5 * np.array([[1, -1j], [1j, 1]]))
        assert p.range().equals(Subspace.from_span([[-1j, 1]]))

    def test_kernel_of_second_z_projector(self):
        p = pl.validate_projector([[0, 0], [0, 1]])
        assert p.kernel().equals(Subspace.from_span([[1, 0]]))

    def test_kernel_of_zero_is_everything(self):
        assert pl.validate_projector(np.zeros((2, 2))).kernel().is_full()

    def test_kernel_of_second_x_projector(self):
        p = pl.validate_projector(0.5 * np.array([[1, -1], [-1, 1]]))
        assert p.kernel().equals(Subspace.from_span([[1, 1]]))

    def test_range_vectors_are_fixed(self):
        rng = np.random.default_rng(43)
        tol = pl.DEFAULT_TOLERANCES
        for dim in (2, 3, 4):
            p = random_projector(rng, dim, rng.integers(1, dim + 1))
            for v in p.range().basis.T:
                assert np.linalg.norm(p.matrix @ v - v) <= tol.eps_entry


class TestIsInvariant:
    def test_range_and_kernel_are_invariant(self):
        rng = np.random.default_rng(47)
        for dim in (2, 3, 4):
            p = random_projector(rng, dim, rng.integers(1, dim + 1))
            assert pl.is_invariant(p.range(), p)
            assert pl.is_invariant(p.kernel(), p)

    def test_full_space_is_trivially_invariant(self):
        p = pl.validate_projector(P1X)
        assert pl.is_invariant(Subspace.full(2), p)

    def test_skew_line_is_not_invariant(self):
        line = Subspace.from_span([[1, 1]])
        assert not pl.is_invariant(line, pl.validate_projector(P1Z))

    def test_ambient_mismatch_raises(self):
        with pytest.raises(pl.DimensionMismatchError):
            pl.is_invariant(Subspace.full(3), pl.validate_projector(P1Z))


class TestValidateContext:
    def test_z_pair_is_a_context(self):
        members = [
            pl.validate_projector(P1Z, label="P1"),
            pl.validate_projector([[0, 0], [0, 1]], label="P2"),
        ]
        ctx = pl.validate_context(members, name="z")
        assert len(ctx) == 2
        assert ctx.labels == ("P1", "P2")

    def test_identity_singleton_is_a_context(self):
        ctx = pl.validate_context([pl.validate_projector(I2)], name="one")
        assert len(ctx) == 1

    def test_non_annihilating_pair_rejected(self):
        members = [pl.validate_projector(P1Z), pl.validate_projector(P1X)]
        with pytest.raises(pl.PairwiseProductNonzeroError) as excinfo:
            pl.validate_context(members)
        assert excinfo.value.pair == (0, 1)
        assert excinfo.value.residual == pytest.approx(0.5)

    def test_incomplete_sum_rejected(self):
        with pytest.raises(pl.SumNotIdentityError):
            pl.validate_context([pl.validate_projector(P1Z)])

    def test_empty_context_rejected(self):
        with pytest.raises(pl.ValidationError):
            pl.validate_context([])

    def test_rank_sum_matches_ambient_dimension(self):
        rng = np.random.default_rng(53)
        for dim in (2, 3, 4):
            ctx = random_rank1_context(rng, dim)
            assert sum(p.rank for p in ctx.members) == dim


class TestContextFromBasis:
    def test_standard_basis_gives_z_context(self):
        ctx = pl.context_from_basis([[1, 0], [0, 1]], name="z")
        assert np.allclose(ctx.members[0].matrix, P1Z)
        assert np.allclose(ctx.members[1].matrix, [[0, 0], [0, 1]])

    def test_hadamard_basis_gives_x_context(self):
        s = 1 / np.sqrt(2)
        ctx = pl.context_from_basis([[s, s], [s, -s]], name="x")
        assert np.allclose(ctx.members[0].matrix, P1X)
        assert np.allclose(ctx.members[1].matrix, 0.5 * np.array([[1, -1], [-1, 1]]))

    def test_incomplete_basis_rejected(self):
        with pytest.raises(pl.NotCompleteError):
            pl.context_from_basis([[1, 0]])

    def test_non_orthonormal_basis_rejected(self):
        with pytest.raises(pl.NotOrthonormalError):
            pl.context_from_basis([[1, 0], [1, 1]])


class TestPauliContexts:
    def test_three_contexts_of_two(self, pauli):
        assert len(pauli) == 3
        assert pauli.context_names == ("z", "x", "y")
        assert all(len(ctx) == 2 for ctx in pauli.contexts)

    def test_members_revalidate(self, pauli):
        for ctx in pauli.contexts:
            revalidated = pl.validate_context(
                [pl.validate_projector(p.matrix, label=p.label) for p in ctx.members],
                name=ctx.name,
            )
            assert revalidated.labels == ctx.labels

    def test_y_projector_entry(self, pauli):
        p1y = pauli.context_named("y").members[0]
        assert p1y.matrix[0, 1] == -0.5j

    def test_all_six_projectors_are_distinct_identities(self, pauli):
        assert len(pauli.registry) == 6

    def test_context_residuals_are_tiny(self, pauli):
        for ctx in pauli.contexts:
            res = pl.context_residuals(ctx)
            assert res["pairwise_product"] <= 1e-15
            assert res["sum_minus_identity"] <= 1e-15


class TestContextCollection:
    def test_shared_projector_has_one_identity(self):
        rng = np.random.default_rng(59)
        shared = np.array([1, 0, 0], dtype=complex)
        contexts = []
        for k in range(3):
            z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            q, _ = np.linalg.qr(z)
            completion = np.zeros((3, 2), dtype=complex)
            completion[1:, :] = q
            basis = [shared, completion[:, 0], completion[:, 1]]
            contexts.append(pl.context_from_basis(basis, name=f"c{k}"))
        collection = pl.ContextCollection(contexts)
        first = collection.identity_of(0, 0)
        assert all(collection.identity_of(ci, 0) == first for ci in range(3))
        assert len(collection.registry) == 1 + 2 * 3

    def test_mixed_dimensions_rejected(self):
        ctx2 = pl.context_from_basis([[1, 0], [0, 1]])
        ctx3 = pl.context_from_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        with pytest.raises(pl.DimensionMismatchError):
            pl.ContextCollection([ctx2, ctx3])

    def test_unknown_context_name(self, pauli):
        with pytest.raises(KeyError):
            pauli.context_named("w")


class TestPairwiseSubspaceIdentities:
    def test_context_members_satisfy_intersection_laws(self):
        rng = np.random.default_rng(61)
        for dim in (2, 3, 4):
            ctx = random_rank1_context(rng, dim)
            ranges = [p.range() for p in ctx.members]
            kernels = [p.kernel() for p in ctx.members]
            for i in range(dim):
                for j in range(dim):
                    if i == j:
                        continue
                    assert ranges[i].meet(ranges[j]).is_zero()
                    assert ranges[i].meet(kernels[j]).equals(ranges[i])
                    assert kernels[i].meet(ranges[j]).equals(ranges[j])
                    rest = [k for k in range(dim) if k not in (i, j)]
                    if rest:
                        remainder = Subspace.column_space(
                            sum(ctx.members[k].matrix for k in rest)
                        )
                    else:
                        remainder = Subspace.zero(dim)
                    assert kernels[i].meet(kernels[j]).equals(remainder)
