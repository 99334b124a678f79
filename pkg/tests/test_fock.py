import numpy as np
import pytest

from phaseref import (
    DensityOperator,
    FockSpace,
    Ket,
    ValidationError,
    fidelity_with_pure,
    hermitian_eigendecomposition,
    partial_trace,
    phase_state,
    pure_density,
    tensor_product,
    validate_density,
    von_neumann_entropy,
)
from conftest import random_density, random_hermitian


def qubit_ket(a, b):
    return Ket(FockSpace.qubit(), np.array([a, b], dtype=complex))


class TestFockSpace:
    def test_reference_factor_labels(self):
        space = FockSpace.reference(3)
        assert space.total_dimension == 4
        assert list(space.number_labels) == [0, 1, 2, 3]

    def test_composite_labels_are_sums(self):
        space = FockSpace.reference(2).tensor(FockSpace.qubit())
        # row-major, reference most significant: index = 2n + s
        assert list(space.number_labels) == [0, 1, 1, 2, 2, 3]

    def test_total_dimension_is_product(self):
        space = FockSpace.reference(4).tensor(FockSpace.qubit())
        assert space.total_dimension == 10

    def test_non_normalized_ket_rejected(self):
        with pytest.raises(ValidationError, match="norm"):
            Ket(FockSpace.qubit(), np.array([1.0, 1.0]))


class TestPureDensity:
    def test_basis_projector(self):
        rho = pure_density(Ket.basis(FockSpace.qubit(), 0))
        assert np.allclose(rho.matrix, [[1, 0], [0, 0]])

    def test_plus_state(self):
        rho = pure_density(qubit_ket(1 / np.sqrt(2), 1 / np.sqrt(2)))
        assert np.allclose(rho.matrix, 0.5 * np.ones((2, 2)))

    def test_phase_state_n3(self):
        rho = pure_density(phase_state(3))
        assert np.allclose(rho.matrix, 0.25 * np.ones((4, 4)))


class TestTensorProduct:
    def test_vacuum_pair(self):
        v = pure_density(Ket.basis(FockSpace.qubit(), 0))
        rho = tensor_product(v, v)
        expected = np.zeros((4, 4))
        expected[0, 0] = 1
        assert np.allclose(rho.matrix, expected)

    def test_dimensions_multiply(self):
        a = pure_density(phase_state(4))
        b = pure_density(Ket.basis(FockSpace.qubit(), 0))
        assert tensor_product(a, b).space.total_dimension == 10

    def test_labels_add(self):
        a = pure_density(phase_state(2))
        b = pure_density(Ket.basis(FockSpace.qubit(), 1))
        labels = tensor_product(a, b).space.number_labels
        assert list(labels) == [0, 1, 1, 2, 2, 3]


class TestPartialTrace:
    def test_product_state_reduction(self, rng):
        ra = random_density(FockSpace.reference(2), rng)
        rb = random_density(FockSpace.qubit(), rng)
        reduced = partial_trace(tensor_product(ra, rb), keep=[0])
        assert np.allclose(reduced.matrix, ra.matrix, atol=1e-12)

    def test_bell_like_state(self):
        space = FockSpace.qubit().tensor(FockSpace.qubit())
        psi = Ket(space, np.array([0, 1, 1, 0]) / np.sqrt(2))
        reduced = partial_trace(pure_density(psi), keep=[0])
        assert np.allclose(reduced.matrix, np.diag([0.5, 0.5]), atol=1e-12)

    def test_entangled_joint_state_n1(self):
        # joint output amplitudes (1/sqrt2, 1/2, 1/2, 0) on reference x qubit
        space = FockSpace.reference(1).tensor(FockSpace.qubit())
        psi = Ket(space, np.array([1 / np.sqrt(2), 0.5, 0.5, 0.0]))
        reduced = partial_trace(pure_density(psi), keep=[0])
        expected = np.array([[0.75, np.sqrt(2) / 4], [np.sqrt(2) / 4, 0.25]])
        assert np.allclose(reduced.matrix, expected, atol=1e-9)

    def test_degenerate_selectors_rejected(self, rng):
        rho = random_density(FockSpace.qubit().tensor(FockSpace.qubit()), rng)
        with pytest.raises(ValidationError):
            partial_trace(rho, keep=[])
        with pytest.raises(ValidationError):
            partial_trace(rho, keep=[0, 1])

    def test_trace_and_hermiticity_preserved(self, rng):
        space = FockSpace.reference(3).tensor(FockSpace.qubit())
        for _ in range(20):
            rho = random_density(space, rng)
            red = partial_trace(rho, keep=[0])
            assert abs(np.trace(red.matrix) - 1) < 1e-12
            assert np.max(np.abs(red.matrix - red.matrix.conj().T)) < 1e-12

    def test_schmidt_symmetry(self, rng):
        space = FockSpace.reference(3).tensor(FockSpace.qubit())
        for _ in range(10):
            v = rng.normal(size=8) + 1j * rng.normal(size=8)
            psi = Ket(space, v / np.linalg.norm(v))
            rho = pure_density(psi)
            lam_r = np.sort(np.linalg.eigvalsh(partial_trace(rho, keep=[0]).matrix))[-2:]
            lam_s = np.sort(np.linalg.eigvalsh(partial_trace(rho, keep=[1]).matrix))
            assert np.allclose(lam_r, lam_s, atol=1e-10)


class TestEigendecomposition:
    def test_identity(self):
        lam, v = hermitian_eigendecomposition(np.eye(5))
        assert np.allclose(lam, 1.0)
        assert np.allclose(v @ v.conj().T, np.eye(5), atol=1e-12)

    def test_diagonal_input(self):
        lam, _ = hermitian_eigendecomposition(np.diag([0.75, 0.25]))
        assert np.allclose(lam, [0.75, 0.25])

    def test_two_by_two_closed_form(self):
        m = np.array([[0.75, np.sqrt(2) / 4], [np.sqrt(2) / 4, 0.25]])
        lam, _ = hermitian_eigendecomposition(m)
        expected = [(1 + np.sqrt(3) / 2) / 2, (1 - np.sqrt(3) / 2) / 2]
        assert np.allclose(lam, expected, atol=1e-12)

    def test_descending_order_and_reconstruction(self, rng):
        for dim in (2, 7, 16, 64):
            m = random_hermitian(dim, rng)
            lam, v = hermitian_eigendecomposition(m)
            assert all(lam[i] >= lam[i + 1] for i in range(dim - 1))
            recon = v @ np.diag(lam) @ v.conj().T
            assert np.max(np.abs(recon - m)) < 1e-10

    def test_deterministic_output(self, rng):
        m = random_hermitian(8, rng)
        lam1, v1 = hermitian_eigendecomposition(m)
        lam2, v2 = hermitian_eigendecomposition(m.copy())
        assert np.array_equal(lam1, lam2)
        assert np.array_equal(v1, v2)

    def test_non_hermitian_rejected(self):
        with pytest.raises(ValidationError, match="Hermitian"):
            hermitian_eigendecomposition(np.array([[0, 1], [0, 0]], dtype=complex))


class TestEntropy:
    def test_pure_state_zero(self):
        assert von_neumann_entropy(pure_density(phase_state(5))) < 1e-12

    def test_maximally_mixed_qubit(self):
        rho = DensityOperator(FockSpace.qubit(), np.eye(2) / 2)
        assert abs(von_neumann_entropy(rho) - 1.0) < 1e-12

    def test_binary_entropy_quarter(self):
        rho = DensityOperator(FockSpace.qubit(), np.diag([0.75, 0.25]))
        expected = 2 - 0.75 * np.log2(3)
        assert abs(von_neumann_entropy(rho) - expected) < 1e-12
        assert abs(expected - 0.811278) < 1e-6

    def test_additivity_on_products(self, rng):
        a = random_density(FockSpace.reference(3), rng)
        b = random_density(FockSpace.qubit(), rng)
        s_ab = von_neumann_entropy(tensor_product(a, b))
        assert abs(s_ab - von_neumann_entropy(a) - von_neumann_entropy(b)) < 1e-9


class TestFidelity:
    def plus(self):
        return qubit_ket(1 / np.sqrt(2), 1 / np.sqrt(2))

    def test_self_overlap(self):
        assert abs(fidelity_with_pure(pure_density(self.plus()), self.plus()) - 1) < 1e-12

    def test_maximally_mixed(self):
        rho = DensityOperator(FockSpace.qubit(), np.eye(2) / 2)
        assert abs(fidelity_with_pure(rho, self.plus()) - 0.5) < 1e-12

    def test_vacuum_overlap(self):
        rho = pure_density(Ket.basis(FockSpace.qubit(), 0))
        assert abs(fidelity_with_pure(rho, self.plus()) - 0.5) < 1e-12

    def test_space_mismatch(self):
        rho = pure_density(phase_state(2))
        with pytest.raises(ValidationError):
            fidelity_with_pure(rho, self.plus())

    def test_linearity(self, rng):
        space = FockSpace.qubit()
        r1, r2 = random_density(space, rng), random_density(space, rng)
        p = 0.3
        mix = DensityOperator(space, p * r1.matrix + (1 - p) * r2.matrix)
        lhs = fidelity_with_pure(mix, self.plus())
        rhs = p * fidelity_with_pure(r1, self.plus()) + (1 - p) * fidelity_with_pure(r2, self.plus())
        assert abs(lhs - rhs) < 1e-12


class TestValidateDensity:
    def test_valid_state_passes(self, rng):
        rho = random_density(FockSpace.reference(4), rng)
        report = validate_density(rho)
        assert report.ok
        assert report.hermiticity_deviation < 1e-12

    def test_trace_two_fails(self):
        from phaseref.fock import validate_density_matrix

        report = validate_density_matrix(np.eye(2))
        assert not report.ok
        assert abs(report.trace_deviation - 1.0) < 1e-12

    def test_negative_eigenvalue_fails(self):
        from phaseref.fock import validate_density_matrix

        report = validate_density_matrix(np.diag([1.1, -0.1]))
        assert not report.ok
        assert report.min_eigenvalue < -1e-9
