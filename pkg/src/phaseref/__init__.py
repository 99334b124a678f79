"""Simulation of phase-reference consumption under the U(1) superselection rule."""

from .fock import (
    DensityOperator,
    DensityValidationReport,
    FockFactor,
    FockSpace,
    Ket,
    UnitaryOperator,
    ValidationError,
    fidelity_with_pure,
    hermitian_eigendecomposition,
    partial_trace,
    pure_density,
    tensor_product,
    validate_density,
    von_neumann_entropy,
)
from .protocol import (
    DegradationSeries,
    ProtocolConfig,
    UseRecord,
    build_frs,
    first_use_fidelity_closed_form,
    phase_state,
    run_degradation,
    single_use,
    target_ket,
)
from .symmetry import (
    AsymmetryReport,
    asymmetry,
    is_g_invariant_unitary,
    phase_shift_unitary,
    twirl_cyclic,
    twirl_u1,
)
from .sweep import SweepConfig, read_csv, run_sweep, write_csv
from .plotting import render_svg

__all__ = [
    "AsymmetryReport",
    "DegradationSeries",
    "DensityOperator",
    "DensityValidationReport",
    "FockFactor",
    "FockSpace",
    "Ket",
    "ProtocolConfig",
    "SweepConfig",
    "UnitaryOperator",
    "UseRecord",
    "ValidationError",
    "asymmetry",
    "build_frs",
    "fidelity_with_pure",
    "first_use_fidelity_closed_form",
    "hermitian_eigendecomposition",
    "is_g_invariant_unitary",
    "partial_trace",
    "phase_shift_unitary",
    "phase_state",
    "pure_density",
    "read_csv",
    "render_svg",
    "run_degradation",
    "run_sweep",
    "single_use",
    "target_ket",
    "tensor_product",
    "twirl_cyclic",
    "twirl_u1",
    "validate_density",
    "von_neumann_entropy",
    "write_csv",
]

__version__ = "0.1.0"
