"""Energy-momentum bookkeeping for plane waves in the moving medium.

The flux tensor built from F and H (Minkowski's) and the canonical tensor
derived from the Lagrangian agree, cycle-averaged, for on-shell waves with
vanishing gauge scalar; their four-momentum over a periodic cell is
parallel to the wave four-vector and spacelike whenever n > 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT, HBAR
from .dispersion import PlaneWave, dispersion_residual
from .fourvec import (
    LOWER,
    METRIC,
    METRIC_SIGNATURE,
    FourVector,
    Tensor2,
    minkowski_dot,
)
from .medium import (
    FieldTensors,
    MediumSpec,
    gauge_scalar,
    plane_wave_amplitudes,
)

TIMELIKE = "timelike"
SPACELIKE = "spacelike"
NULL = "null"

SOURCE_MINKOWSKI = "minkowski_tensor"
SOURCE_CANONICAL = "canonical_tensor"
SOURCE_MODE = "mode_formula"

CLASSIFICATION_TOL = 1e-10
GAUGE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MomentumReport:
    """Four-momentum with its invariant square and causal classification."""

    momentum: FourVector
    momentum_squared: float
    classification: str
    source: str


def classify_momentum(p: FourVector, tol: float = CLASSIFICATION_TOL) -> str:
    s = float(np.real(minkowski_dot(p, p)))
    scale = float(np.sum(np.abs(p.components) ** 2))
    if abs(s) <= tol * max(scale, 1e-300):
        return NULL
    return TIMELIKE if s > 0.0 else SPACELIKE


def _flux_tensor(f: np.ndarray, h: np.ndarray) -> np.ndarray:
    # -F_{mu a} H_nu^a + (1/4) g_{mu nu} F:H, assembled on raw components.
    term = -(f * METRIC_SIGNATURE[None, :]) @ h.T
    invariant = (np.outer(METRIC_SIGNATURE, METRIC_SIGNATURE) * f * h).sum()
    return term + 0.25 * METRIC * invariant


def minkowski_tensor(fields: FieldTensors) -> Tensor2:
    """Instantaneous flux tensor from field and excitation tensors.

    Traceless by construction; its time column is (energy density, D x B).
    """
    f = fields.f.lowered().components
    h = fields.h.lowered().components
    return Tensor2(np.real(_flux_tensor(f, h)), (LOWER, LOWER))


def cycle_averaged_minkowski(m: MediumSpec, wave: PlaneWave) -> Tensor2:
    """Flux tensor averaged over one oscillation cycle (closed form)."""
    f_hat, h_hat = plane_wave_amplitudes(m, wave)
    avg = 0.5 * np.real(_flux_tensor(f_hat.components, np.conj(h_hat.components)))
    return Tensor2(avg, (LOWER, LOWER))


def _require_gauge(m: MediumSpec, wave: PlaneWave) -> None:
    if wave.polarization is None:
        raise ValueError("plane wave carries no polarization amplitude")
    g = gauge_scalar(m, wave)
    scale = 1.0 + float(
        np.linalg.norm(wave.k.components) * np.linalg.norm(wave.polarization.components)
    )
    if abs(g) > GAUGE_TOL * scale:
        raise ValueError(f"gauge condition violated: gauge scalar = {g:.3e}")


def canonical_tensor(m: MediumSpec, wave: PlaneWave, x: FourVector | None = None) -> Tensor2:
    """Instantaneous canonical energy-momentum tensor of a plane wave.

    Only defined here for the plane-wave ansatz with vanishing gauge scalar
    (checked); general field configurations are rejected.
    """
    _require_gauge(m, wave)
    k = wave.k.lowered().components
    a = wave.polarization.lowered().components
    phase = 0.0 if x is None else minkowski_dot(wave.k.lowered(), x.lowered())
    osc = np.exp(-1j * float(np.real(phase)))

    f_hat, h_hat = plane_wave_amplitudes(m, wave)
    f = np.real(f_hat.components * osc)
    h = np.real(h_hat.components * osc)
    grad_a = np.real(-1j * np.outer(k, a) * osc)  # d_mu A_alpha

    lagrangian = -0.25 * (np.outer(METRIC_SIGNATURE, METRIC_SIGNATURE) * f * h).sum()
    term = (grad_a * METRIC_SIGNATURE[None, :]) @ h.T
    return Tensor2(-METRIC * lagrangian - term, (LOWER, LOWER))


def cycle_averaged_canonical(m: MediumSpec, wave: PlaneWave) -> Tensor2:
    """Canonical tensor averaged over one cycle (closed form, gauge checked)."""
    _require_gauge(m, wave)
    k = wave.k.lowered().components
    a = wave.polarization.lowered().components
    f_hat, h_hat = plane_wave_amplitudes(m, wave)
    h_conj = np.conj(h_hat.components)

    lagrangian = -0.125 * np.real(
        (np.outer(METRIC_SIGNATURE, METRIC_SIGNATURE) * f_hat.components * h_conj).sum()
    )
    grad_a_hat = -1j * np.outer(k, a)
    term = 0.5 * np.real((grad_a_hat * METRIC_SIGNATURE[None, :]) @ h_conj.T)
    return Tensor2(-METRIC * lagrangian - term, (LOWER, LOWER))


def cell_four_momentum(m: MediumSpec, wave: PlaneWave, source: str = SOURCE_MINKOWSKI) -> MomentumReport:
    """Four-momentum of one spatial period cell of an on-shell plane wave.

    The cycle average is analytic; the cell volume is one wavelength times
    unit transverse area.  ``source`` selects the flux tensor, the canonical
    tensor, or the per-mode rule (momentum parallel to the wave vector with
    the energy fixed by the flux tensor).
    """
    kl = wave.k.lowered()
    scale = 1.0 + float(np.sum(np.abs(kl.components) ** 2))
    if abs(dispersion_residual(m, kl)) > 1e-8 * scale:
        raise ValueError("wave is off the dispersion shell")
    kvec_norm = float(np.linalg.norm(np.real(kl.spatial)))
    if kvec_norm == 0.0:
        raise ValueError("zero spatial wave vector has no period cell")
    cell_volume = 2.0 * np.pi / kvec_norm

    if source == SOURCE_MINKOWSKI:
        avg = cycle_averaged_minkowski(m, wave).components
        momentum = FourVector(avg[:, 0] * cell_volume, LOWER)
    elif source == SOURCE_CANONICAL:
        avg = cycle_averaged_canonical(m, wave).components
        momentum = FourVector(avg[:, 0] * cell_volume, LOWER)
    elif source == SOURCE_MODE:
        k0 = float(np.real(kl.time))
        if abs(k0) < 1e-12:
            raise ValueError("per-mode momentum undefined at zero frequency")
        energy = cycle_averaged_minkowski(m, wave).components[0, 0] * cell_volume
        momentum = FourVector((energy / k0) * np.real(kl.components), LOWER)
    else:
        raise ValueError(f"unknown momentum source {source!r}")

    p_sq = float(np.real(minkowski_dot(momentum, momentum)))
    return MomentumReport(
        momentum=momentum,
        momentum_squared=p_sq,
        classification=classify_momentum(momentum),
        source=source,
    )


def photon_momentum(n: float, omega: float, si: bool = False) -> float:
    """Single-photon momentum n*omega (natural units) or hbar*n*omega/c (SI)."""
    if n <= 0:
        raise ValueError("refractive index must be positive")
    if omega <= 0:
        raise ValueError("angular frequency must be positive")
    if si:
        return HBAR * n * omega / C_LIGHT
    return n * omega


__all__ = [
    "MomentumReport",
    "TIMELIKE",
    "SPACELIKE",
    "NULL",
    "SOURCE_MINKOWSKI",
    "SOURCE_CANONICAL",
    "SOURCE_MODE",
    "classify_momentum",
    "minkowski_tensor",
    "cycle_averaged_minkowski",
    "canonical_tensor",
    "cycle_averaged_canonical",
    "cell_four_momentum",
    "photon_momentum",
]
