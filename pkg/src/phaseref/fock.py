"""Dense complex linear algebra over labeled Fock spaces.

States live on a :class:`FockSpace`, an ordered tensor product of factors
where every basis index of every factor carries a particle-number label.
Composite indices use row-major convention (first factor most significant),
and the label of a composite index is the sum of its factor labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
NORM_TOL = 1e-10
PSD_TOL = 1e-9
ENTROPY_CLIP = 1e-12


class ValidationError(ValueError):
    """A state or operator violates one of its structural invariants."""


@dataclass(frozen=True)
class FockFactor:
    """One tensor factor: a dimension and a particle-number label per basis index."""

    dimension: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise ValidationError(f"factor dimension must be >= 1, got {self.dimension}")
        if len(self.labels) != self.dimension:
            raise ValidationError(
                f"label map has {len(self.labels)} entries for dimension {self.dimension}"
            )
        if any(n < 0 for n in self.labels):
            raise ValidationError("particle-number labels must be non-negative")


@dataclass(frozen=True)
class FockSpace:
    """Ordered list of labeled factors with row-major composite indexing."""

    factors: tuple[FockFactor, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValidationError("a FockSpace needs at least one factor")

    @property
    def total_dimension(self) -> int:
        d = 1
        for f in self.factors:
            d *= f.dimension
        return d

    @property
    def number_labels(self) -> np.ndarray:
        """Particle-number label of every composite basis index."""
        labels = np.zeros(1, dtype=np.int64)
        for f in self.factors:
            labels = (labels[:, None] + np.asarray(f.labels, dtype=np.int64)[None, :]).ravel()
        return labels

    def tensor(self, other: "FockSpace") -> "FockSpace":
        return FockSpace(self.factors + other.factors)

    @staticmethod
    def reference(cutoff_n: int) -> "FockSpace":
        """Single bosonic reference factor holding 0..cutoff_n particles."""
        if cutoff_n < 0:
            raise ValidationError(f"cutoff must be >= 0, got {cutoff_n}")
        return FockSpace((FockFactor(cutoff_n + 1, tuple(range(cutoff_n + 1))),))

    @staticmethod
    def qubit() -> "FockSpace":
        """System qubit: |0> carries 0 particles, |1> carries 1."""
        return FockSpace((FockFactor(2, (0, 1)),))


@dataclass(frozen=True)
class Ket:
    """Normalized complex state vector bound to a FockSpace."""

    space: FockSpace
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (self.space.total_dimension,):
            raise ValidationError(
                f"amplitude vector has shape {amps.shape}, "
                f"space dimension is {self.space.total_dimension}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"ket is not normalized: norm = {norm!r}")

    @staticmethod
    def basis(space: FockSpace, index: int) -> "Ket":
        v = np.zeros(space.total_dimension, dtype=complex)
        v[index] = 1.0
        return Ket(space, v)


@dataclass(frozen=True)
class DensityOperator:
    """Hermitian, unit-trace, positive-semidefinite matrix on a FockSpace."""

    space: FockSpace
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        d = self.space.total_dimension
        if m.shape != (d, d):
            raise ValidationError(f"matrix shape {m.shape} does not match dimension {d}")
        report = validate_density_matrix(m)
        if not report.ok:
            raise ValidationError(f"invalid density operator: {report}")


@dataclass(frozen=True)
class UnitaryOperator:
    """Complex matrix with a unitarity certificate, bound to a FockSpace."""

    space: FockSpace
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        d = self.space.total_dimension
        if m.shape != (d, d):
            raise ValidationError(f"matrix shape {m.shape} does not match dimension {d}")
        dev = float(np.max(np.abs(m @ m.conj().T - np.eye(d))))
        if dev > HERMITICITY_TOL:
            raise ValidationError(f"matrix is not unitary: max |UU+ - I| = {dev:.3e}")


@dataclass(frozen=True)
class DensityValidationReport:
    """Deviations of a candidate matrix from the density-operator contract."""

    hermiticity_deviation: float
    trace_deviation: float
    min_eigenvalue: float

    @property
    def ok(self) -> bool:
        return (
            self.hermiticity_deviation <= HERMITICITY_TOL
            and self.trace_deviation <= TRACE_TOL
            and self.min_eigenvalue >= -PSD_TOL
        )

    def __str__(self):
        return (
            f"hermiticity deviation {self.hermiticity_deviation:.3e}, "
            f"trace deviation {self.trace_deviation:.3e}, "
            f"min eigenvalue {self.min_eigenvalue:.3e}"
        )


def validate_density_matrix(m: np.ndarray) -> DensityValidationReport:
    m = np.asarray(m, dtype=complex)
    herm = float(np.max(np.abs(m - m.conj().T)))
    trace = abs(complex(np.trace(m)) - 1.0)
    # eigvalsh assumes Hermiticity; symmetrize so the PSD check is meaningful
    # even when the Hermiticity check already failed.
    lam = np.linalg.eigvalsh((m + m.conj().T) / 2)
    return DensityValidationReport(herm, float(trace), float(lam.min()))


def validate_density(rho: DensityOperator) -> DensityValidationReport:
    """Report Hermiticity, trace, and PSD deviations against the contract tolerances."""
    return validate_density_matrix(rho.matrix)


def pure_density(psi: Ket) -> DensityOperator:
    """Outer product |psi><psi| as a DensityOperator."""
    return DensityOperator(psi.space, np.outer(psi.amplitudes, psi.amplitudes.conj()))


def tensor_product(a: DensityOperator, b: DensityOperator) -> DensityOperator:
    """Tensor product of two densities on the concatenated FockSpace."""
    return DensityOperator(a.space.tensor(b.space), np.kron(a.matrix, b.matrix))


def partial_trace(rho: DensityOperator, keep: list[int] | tuple[int, ...]) -> DensityOperator:
    """Trace out every factor not listed in ``keep`` (factor indices, input order).

    Keeping all factors or none is a contract violation: use the identity or
    the scalar trace instead.
    """
    nfac = len(rho.space.factors)
    keep = sorted(set(keep))
    if any(k < 0 or k >= nfac for k in keep):
        raise ValidationError(f"factor selector {keep} out of range for {nfac} factors")
    if not keep:
        raise ValidationError("empty selector: use the trace instead of partial_trace")
    if len(keep) == nfac:
        raise ValidationError("full selector: partial_trace would be the identity")

    dims = [f.dimension for f in rho.space.factors]
    t = rho.matrix.reshape(dims + dims)
    # einsum contraction: traced factors get the same index letter on the row
    # and column axis, kept factors keep distinct letters.
    letters = "abcdefghijklmnopqrstuvwxyz"
    row = list(letters[:nfac])
    col = [letters[nfac + i] if i in keep else row[i] for i in range(nfac)]
    out = [row[k] for k in keep] + [col[k] for k in keep]
    reduced = np.einsum("".join(row + col) + "->" + "".join(out), t)
    dkeep = 1
    for k in keep:
        dkeep *= dims[k]
    reduced = reduced.reshape(dkeep, dkeep)
    space = FockSpace(tuple(rho.space.factors[k] for k in keep))
    return DensityOperator(space, reduced)


def hermitian_eigendecomposition(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (real, descending) and eigenvectors of a Hermitian matrix.

    Returns ``(lam, v)`` with ``v @ diag(lam) @ v.conj().T`` reconstructing the
    input. Eigenvector phases are fixed (first component of significant
    magnitude made real positive) so the output is deterministic.
    """
    m = np.asarray(m, dtype=complex)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > HERMITICITY_TOL:
        raise ValidationError(f"matrix is not Hermitian: max |M - M+| = {dev:.3e}")
    lam, v = np.linalg.eigh(m)
    order = np.argsort(-lam, kind="stable")
    lam = lam[order]
    v = v[:, order]
    for j in range(v.shape[1]):
        col = v[:, j]
        k = int(np.argmax(np.abs(col) > 1e-8))
        phase = col[k] / abs(col[k])
        v[:, j] = col / phase
    return lam, v


def von_neumann_entropy(rho: DensityOperator) -> float:
    """S(rho) = -sum lam log2 lam in bits, with 0 log 0 = 0."""
    lam = np.linalg.eigvalsh(rho.matrix)
    if lam.min() < -PSD_TOL:
        raise ValidationError(f"PSD violation: eigenvalue {lam.min():.3e} below -{PSD_TOL}")
    lam = np.where((lam >= -ENTROPY_CLIP) & (lam < 0), 0.0, lam)
    pos = lam[lam > 0]
    s = float(-np.sum(pos * np.log2(pos)))
    return max(s, 0.0)


def fidelity_with_pure(rho: DensityOperator, target: Ket) -> float:
    """<target| rho |target>, real in [0, 1]."""
    if rho.space != target.space:
        raise ValidationError("density and target ket live on different FockSpaces")
    val = target.amplitudes.conj() @ rho.matrix @ target.amplitudes
    return float(val.real)
