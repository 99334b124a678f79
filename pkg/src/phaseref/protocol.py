"""The use-and-degrade experiment.

A bounded phase reference (uniform superposition of 0..N particles) repeatedly
facilitates a number-coherent rotation on a fresh vacuum qubit. Each use
entangles reference and system; tracing out the system leaves the reference a
little more mixed, so its asymmetry, and with it the achievable fidelity,
decays with the use count mu.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    DensityOperator,
    FockSpace,
    Ket,
    UnitaryOperator,
    ValidationError,
    fidelity_with_pure,
    partial_trace,
    pure_density,
)
from .symmetry import asymmetry

DRIFT_TOL = 1e-9


@dataclass(frozen=True)
class ProtocolConfig:
    cutoff_n: int
    theta: float = 0.0
    uses: int = 30

    def __post_init__(self):
        if self.cutoff_n < 1:
            raise ValidationError(f"cutoff_n must be >= 1, got {self.cutoff_n}")
        if self.uses < 1:
            raise ValidationError(f"uses must be >= 1, got {self.uses}")


@dataclass(frozen=True)
class UseRecord:
    mu: int
    fidelity: float | None
    asymmetry_bits: float
    normalized_asymmetry: float
    reference_entropy_bits: float


@dataclass(frozen=True)
class DegradationSeries:
    config: ProtocolConfig
    records: tuple[UseRecord, ...]


def phase_state(cutoff_n: int, theta: float = 0.0) -> Ket:
    """Uniform-amplitude reference state exp(i theta n)/sqrt(N+1), n = 0..N."""
    if cutoff_n < 0:
        raise ValidationError(f"cutoff_n must be >= 0, got {cutoff_n}")
    space = FockSpace.reference(cutoff_n)
    n = np.arange(cutoff_n + 1)
    amps = np.exp(1j * theta * n) / np.sqrt(cutoff_n + 1)
    return Ket(space, amps)


def build_frs(cutoff_n: int, alt_completion: bool = False) -> UnitaryOperator:
    """Number-conserving unitary rotating each coherent pair {|n,0>, |n-1,1>}.

    For n = 1..N it sends |n>_R|0>_S to (|n>_R|0>_S + |n-1>_R|1>_S)/sqrt(2).
    The action on the partner inputs |n-1>_R|1>_S is not pinned down by that
    requirement; the canonical completion is the Hadamard-type rotation
    (-|n>|0> + |n-1>|1>)/sqrt(2), and the unpaired states |0>|0> and |N>|1>
    are fixed. ``alt_completion`` multiplies the free columns by phases, which
    yields a different valid unitary that is indistinguishable in the protocol
    because those inputs are never populated.
    """
    if cutoff_n < 1:
        raise ValidationError(f"cutoff_n must be >= 1, got {cutoff_n}")
    space = FockSpace.reference(cutoff_n).tensor(FockSpace.qubit())
    dim = 2 * (cutoff_n + 1)
    u = np.zeros((dim, dim), dtype=complex)

    def idx(n: int, s: int) -> int:
        return 2 * n + s

    u[idx(0, 0), idx(0, 0)] = 1.0
    u[idx(cutoff_n, 1), idx(cutoff_n, 1)] = 1.0 if not alt_completion else -1.0
    r = 1 / np.sqrt(2)
    for n in range(1, cutoff_n + 1):
        u[idx(n, 0), idx(n, 0)] = r
        u[idx(n - 1, 1), idx(n, 0)] = r
        free = 1j if alt_completion else 1.0
        u[idx(n, 0), idx(n - 1, 1)] = -r * free
        u[idx(n - 1, 1), idx(n - 1, 1)] = r * free
    return UnitaryOperator(space, u)


def vacuum_qubit() -> DensityOperator:
    return pure_density(Ket.basis(FockSpace.qubit(), 0))


def single_use(
    reference: DensityOperator, frs: UnitaryOperator
) -> tuple[DensityOperator, DensityOperator]:
    """One protocol step: couple the reference to a fresh vacuum qubit.

    Forms reference x |0><0|, conjugates by frs, re-Hermitizes and renormalizes
    the trace (round-off only; drift beyond 1e-9 is an error), and returns
    (new_reference, system_out) as the two partial traces.
    """
    joint = np.kron(reference.matrix, vacuum_qubit().matrix)
    out = frs.matrix @ joint @ frs.matrix.conj().T
    herm_dev = float(np.max(np.abs(out - out.conj().T)))
    tr = complex(np.trace(out))
    if herm_dev > DRIFT_TOL or abs(tr - 1.0) > DRIFT_TOL:
        raise ValidationError(
            f"conjugation drift beyond tolerance: hermiticity {herm_dev:.3e}, "
            f"trace deviation {abs(tr - 1.0):.3e}"
        )
    out = (out + out.conj().T) / 2
    out = out / tr.real
    joint_rho = DensityOperator(frs.space, out)
    new_reference = partial_trace(joint_rho, keep=[0])
    system_out = partial_trace(joint_rho, keep=[1])
    return new_reference, system_out


def first_use_fidelity_closed_form(cutoff_n: int) -> float:
    """Closed-form fidelity of the very first use starting from the phase state.

    F1(N) = 1/2 + (N-1)/(2(N+1)) + 1/(sqrt(2)(N+1)); the populations
    contribute exactly 1/2 and the two coherence terms come from the entangled
    joint state's system off-diagonal. Used only as an independent test oracle.
    """
    if cutoff_n < 1:
        raise ValidationError(f"cutoff_n must be >= 1, got {cutoff_n}")
    n = cutoff_n
    return 0.5 + (n - 1) / (2 * (n + 1)) + 1 / (np.sqrt(2) * (n + 1))


def target_ket(theta: float = 0.0) -> Ket:
    """The ideal system output (|0> + exp(i theta)|1>)/sqrt(2)."""
    return Ket(FockSpace.qubit(), np.array([1.0, np.exp(1j * theta)]) / np.sqrt(2))


def run_degradation(
    config: ProtocolConfig, frs: UnitaryOperator | None = None
) -> DegradationSeries:
    """Iterate single_use from the phase state, recording one UseRecord per mu.

    mu = 0 records the pristine reference (no fidelity); mu = 1..uses record
    the fidelity of that use's system output against the target together with
    the post-use reference asymmetry and entropy.
    """
    if frs is None:
        frs = build_frs(config.cutoff_n)
    eta = np.log2(config.cutoff_n + 1)
    target = target_ket(config.theta)
    reference = pure_density(phase_state(config.cutoff_n, config.theta))

    def record(mu: int, fidelity: float | None) -> UseRecord:
        rep = asymmetry(reference)
        return UseRecord(
            mu=mu,
            fidelity=fidelity,
            asymmetry_bits=rep.asymmetry_bits,
            normalized_asymmetry=rep.asymmetry_bits / eta,
            reference_entropy_bits=rep.state_entropy_bits,
        )

    records = [record(0, None)]
    for mu in range(1, config.uses + 1):
        reference, system_out = single_use(reference, frs)
        records.append(record(mu, fidelity_with_pure(system_out, target)))
    return DegradationSeries(config, tuple(records))
