"""SI-unit force densities and experiment predictors.

The physical force density on a nonmagnetic dielectric splits into a
boundary/gradient part shared by the competing momentum assignments and an
oscillatory part proportional to the time derivative of the Poynting
vector, which averages away over a full optical cycle.  This module is the
only SI-unit corner of the package.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT, EPS0
from .emtensor import photon_momentum


@dataclass(frozen=True, eq=False)
class ForceSample:
    """Force-density decomposition at one position; the total is the exact
    componentwise sum of the two parts."""

    position: np.ndarray
    f_am: np.ndarray
    f_a: np.ndarray
    f_total: np.ndarray

    @classmethod
    def at(cls, position, e_field, grad_eps, n: float, ds_dt) -> "ForceSample":
        f_am = abraham_minkowski_force(e_field, grad_eps)
        f_a = abraham_force(n, ds_dt)
        return cls(
            position=np.asarray(position, dtype=float),
            f_am=f_am,
            f_a=f_a,
            f_total=f_am + f_a,
        )


@dataclass(frozen=True, eq=False)
class ExperimentPrediction:
    name: str
    value: float
    unit: str
    inputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if not np.isfinite(self.value):
            raise ValueError(f"non-finite prediction for {self.name}")


def abraham_minkowski_force(e_field, grad_eps) -> np.ndarray:
    """Gradient force density -(1/2) eps0 E^2 grad(eps), N/m^3.

    ``e_field`` may be a magnitude (V/m) or a 3-vector; the force points
    from higher to lower permittivity, which is what lifts a free liquid
    surface under a beam.
    """
    e = np.asarray(e_field, dtype=float)
    e_squared = float(e**2) if e.ndim == 0 else float(e @ e)
    return -0.5 * EPS0 * e_squared * np.asarray(grad_eps, dtype=float)


def abraham_force(n: float, ds_dt) -> np.ndarray:
    """Oscillatory force density ((n^2 - 1)/c^2) d(E x H)/dt, N/m^3.

    Nonmagnetic medium assumed.  Zero for n = 1 and for stationary beams;
    averages to zero over any whole number of optical periods.
    """
    return ((n**2 - 1.0) / C_LIGHT**2) * np.asarray(ds_dt, dtype=float)


def mirror_pressure(n: float, reflectivity: float, poynting: float) -> float:
    """Radiation pressure (n/c)(1 + R) S on a mirror immersed in the medium, Pa."""
    if not 0.0 <= reflectivity <= 1.0:
        raise ValueError("reflectivity must lie in [0, 1]")
    if poynting < 0.0:
        raise ValueError("incident Poynting flux must be nonnegative")
    if n <= 0.0:
        raise ValueError("refractive index must be positive")
    return (n / C_LIGHT) * (1.0 + reflectivity) * poynting


def jones_ratio(n: float, reflectivity: float = 1.0, poynting: float = 1.0) -> float:
    """Pressure in medium over pressure in vacuum at equal R and S; equals n."""
    return mirror_pressure(n, reflectivity, poynting) / mirror_pressure(1.0, reflectivity, poynting)


def abraham_torque(power: float, modulation: float, ring_radius: float, n: float) -> float:
    """Torque amplitude on a ring of circulating power modulated at ``modulation``.

    Ring model: the oscillatory force density integrated over a thin loop of
    circulating power P at radius R carries angular momentum
    (n^2 - 1) 2 pi R^2 P / c^2, and modulating the power at omega0 turns it
    into the torque amplitude omega0 (n^2 - 1) 2 pi R^2 P / c^2.  This is an
    order-of-magnitude model, not an exact device formula; the reported
    value is the amplitude, with the sign convention carried by the
    modulation phase.
    """
    if power <= 0.0 or modulation <= 0.0 or ring_radius <= 0.0:
        raise ValueError("power, modulation frequency and ring radius must be positive")
    if n <= 0.0:
        raise ValueError("refractive index must be positive")
    return modulation * (n**2 - 1.0) * 2.0 * np.pi * ring_radius**2 * power / C_LIGHT**2


def _profile_samples(eps_profile, samples: int) -> np.ndarray:
    if callable(eps_profile):
        return np.asarray([eps_profile(s) for s in np.linspace(0.0, 1.0, samples)], dtype=float)
    return np.asarray(eps_profile, dtype=float)


def surface_force_integral(eps_profile, amplitude: float, field_component: str = "tangential",
                           samples: int = 10001) -> float:
    """Net surface pressure from the gradient force across a boundary layer, Pa.

    ``eps_profile`` is the relative permittivity through the layer (callable
    on [0, 1] or an array of samples).  For a tangential electric field of
    magnitude ``amplitude`` (continuous across the layer) the result is
    -(1/2) eps0 E^2 (eps_end - eps_start), independent of the profile shape.
    For ``field_component="normal"`` the continuous quantity is the normal
    displacement D_n (C/m^2) and the endpoint dependence is through 1/eps.
    Interior pressure distributions (electrostriction) are out of scope.
    A non-monotone profile is flagged with a warning; the endpoint value is
    still returned.
    """
    eps = _profile_samples(eps_profile, samples)
    if eps.ndim != 1 or eps.size < 2:
        raise ValueError("permittivity profile needs at least two samples")
    diffs = np.diff(eps)
    if not (np.all(diffs >= -1e-15) or np.all(diffs <= 1e-15)):
        warnings.warn("non-monotone permittivity profile across the layer", RuntimeWarning)
    if field_component == "tangential":
        return -0.5 * EPS0 * amplitude**2 * (eps[-1] - eps[0])
    if field_component == "normal":
        return 0.5 * (amplitude**2 / EPS0) * (1.0 / eps[-1] - 1.0 / eps[0])
    raise ValueError(f"unknown field component {field_component!r}")


def photon_recoil(n: float, omega: float) -> float:
    """Recoil momentum hbar n omega / c transferred per absorbed photon, kg m/s."""
    return photon_momentum(n, omega, si=True)


def experiment_suite(n: float, reflectivity: float, poynting: float, omega: float,
                     power: float, modulation: float, ring_radius: float) -> list[ExperimentPrediction]:
    """Predictions for the standard bench experiments at the given parameters."""
    inputs = {
        "n": n,
        "reflectivity": reflectivity,
        "poynting_w_m2": poynting,
        "omega_rad_s": omega,
        "power_w": power,
        "modulation_rad_s": modulation,
        "ring_radius_m": ring_radius,
    }
    return [
        ExperimentPrediction("jones_ratio", jones_ratio(n, reflectivity, poynting), "dimensionless", inputs),
        ExperimentPrediction("mirror_pressure", mirror_pressure(n, reflectivity, poynting), "Pa", inputs),
        ExperimentPrediction("photon_recoil", photon_recoil(n, omega), "kg m/s", inputs),
        ExperimentPrediction("abraham_torque", abraham_torque(power, modulation, ring_radius, n), "N m", inputs),
    ]
