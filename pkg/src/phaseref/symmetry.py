"""U(1) superselection machinery: phase shifts, twirls, asymmetry, invariance.

The group acts by the diagonal unitaries exp(i theta n(j)) where n(j) is the
particle-number label of basis index j. Averaging over the full group deletes
every matrix element between distinct total-number sectors; the finite cyclic
subgroup of order d only deletes elements whose label difference is not a
multiple of d.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fock import (
    DensityOperator,
    FockSpace,
    UnitaryOperator,
    ValidationError,
    von_neumann_entropy,
)

ASYMMETRY_ROUNDOFF = 1e-9
INVARIANCE_TOL = 1e-10


def phase_shift_unitary(space: FockSpace, theta: float) -> UnitaryOperator:
    """Diagonal representation of the group element theta: exp(i theta n(j))."""
    phases = np.exp(1j * theta * space.number_labels)
    return UnitaryOperator(space, np.diag(phases))


def _sector_mask(space: FockSpace) -> np.ndarray:
    n = space.number_labels
    return n[:, None] - n[None, :]


def twirl_cyclic(rho: DensityOperator, d: int) -> DensityOperator:
    """Average over the cyclic subgroup {2 pi k / d : k = 0..d-1}.

    Equivalent to keeping matrix element (i, j) iff n(i) = n(j) mod d.
    """
    if d < 1:
        raise ValidationError(f"cyclic group order must be >= 1, got {d}")
    diff = _sector_mask(rho.space)
    mask = (diff % d) == 0
    return DensityOperator(rho.space, rho.matrix * mask)


def twirl_u1(rho: DensityOperator) -> DensityOperator:
    """Full U(1) twirl: projection onto total-particle-number sectors.

    The Haar average of exp(i theta (n - m)) vanishes unless n = m, so the
    continuous twirl is computed exactly by zeroing all off-sector elements.
    """
    mask = _sector_mask(rho.space) == 0
    return DensityOperator(rho.space, rho.matrix * mask)


@dataclass(frozen=True)
class AsymmetryReport:
    """Entropy gap between a state and its twirl, in bits."""

    asymmetry_bits: float
    twirled_entropy_bits: float
    state_entropy_bits: float


def asymmetry(rho: DensityOperator) -> AsymmetryReport:
    """A(rho) = S(twirl(rho)) - S(rho) in bits; round-off negatives clamp to 0."""
    s_state = von_neumann_entropy(rho)
    s_twirl = von_neumann_entropy(twirl_u1(rho))
    a = s_twirl - s_state
    if a < -ASYMMETRY_ROUNDOFF:
        raise ValidationError(f"asymmetry {a:.3e} below round-off window; state invalid")
    return AsymmetryReport(max(a, 0.0), s_twirl, s_state)


def is_g_invariant_unitary(
    u: UnitaryOperator, tol: float = INVARIANCE_TOL
) -> tuple[bool, float]:
    """Whether u commutes with every phase shift, i.e. is number-block-diagonal.

    Returns (invariant, max off-sector magnitude).
    """
    off_sector = _sector_mask(u.space) != 0
    if not off_sector.any():
        return True, 0.0
    violation = float(np.max(np.abs(u.matrix[off_sector])))
    return violation < tol, violation
