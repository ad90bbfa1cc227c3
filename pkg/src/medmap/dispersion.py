"""Dispersion relation of the moving medium: branches, regimes, wave surfaces.

The shell condition is k^2 + kappa (k.V)^2 = 0.  For a fixed spatial wave
vector it is a quadratic in the frequency with two real roots; the upper
branch can turn negative when the medium moves faster than its own phase
speed (n*v > 1), which is the Cherenkov regime.  The constant-frequency
surface in wave-vector space is an ellipsoid below that threshold and a
two-sheet hyperboloid above it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fourvec import (
    LOWER,
    FourVector,
    InvariantViolation,
    minkowski_dot,
)
from .medium import MediumSpec

ELLIPSOID = "ellipsoid"
TWO_SHEET_HYPERBOLOID = "two_sheet_hyperboloid"
DEGENERATE = "degenerate"

DEGENERACY_BAND = 1e-12
BRANCH_A = "a"
BRANCH_B = "b"


@dataclass(frozen=True, eq=False)
class PlaneWave:
    """Wave four-vector (lower index, time component = angular frequency),
    optional complex polarization four-vector, and branch label."""

    k: FourVector
    polarization: FourVector | None = None
    branch: str | None = None

    def __post_init__(self):
        if self.branch not in (BRANCH_A, BRANCH_B, None):
            raise ValueError(f"unknown branch label {self.branch!r}")


@dataclass(frozen=True, eq=False)
class WaveSurface:
    """Classification of a constant-frequency surface in wave-vector space.

    ``center_offset`` is the signed shift of the quadric center along the
    medium velocity direction; ``semi_axes`` is populated for ellipsoids
    (axial, transverse, transverse).
    """

    kind: str
    center_offset: float
    semi_axes: tuple[float, float, float] | None
    kappa_v2: float


def _wave_scale(k: FourVector) -> float:
    return 1.0 + float(np.sum(np.abs(k.components) ** 2))


def dispersion_residual(m: MediumSpec, k: FourVector) -> float:
    """Shell residual k^2 + kappa (k.V)^2 (zero exactly on the shell)."""
    kl = k.lowered()
    return float(np.real(minkowski_dot(kl, kl) + m.kappa * minkowski_dot(kl, m.V) ** 2))


def _quadratic_coefficients(m: MediumSpec, kvecs: np.ndarray):
    v_spatial = m.V.spatial  # gamma * v
    v0 = m.V.time
    kdotv = kvecs @ v_spatial
    a = 1.0 + m.kappa * v0**2
    b = -2.0 * m.kappa * v0 * kdotv
    c = m.kappa * kdotv**2 - np.sum(kvecs**2, axis=-1)
    return a, b, c


def solve_k0_many(m: MediumSpec, kvecs: np.ndarray) -> np.ndarray:
    """Vectorized frequency roots for an (N, 3) array of spatial wave vectors.

    Returns an (N, 2) array with the upper branch first.  Uses the
    cancellation-safe quadratic formula (larger-magnitude root first, the
    other from the product of roots).
    """
    kvecs = np.asarray(kvecs, dtype=float)
    if kvecs.ndim != 2 or kvecs.shape[1] != 3:
        raise ValueError("expected an (N, 3) array of spatial wave vectors")
    if np.any(np.all(kvecs == 0.0, axis=1)):
        raise ValueError("degenerate input: zero spatial wave vector")
    a, b, c = _quadratic_coefficients(m, kvecs)
    disc = b**2 - 4.0 * a * c
    if np.any(disc < 0.0):
        raise ValueError("no real dispersion roots (negative discriminant)")
    sign_b = np.where(b >= 0.0, 1.0, -1.0)
    q = -0.5 * (b + sign_b * np.sqrt(disc))
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = q / a
        r2 = np.where(q != 0.0, c / np.where(q != 0.0, q, 1.0), 0.0)
    upper = np.maximum(r1, r2)
    lower = np.minimum(r1, r2)
    return np.stack([upper, lower], axis=-1)


def solve_k0(m: MediumSpec, kvec) -> tuple[float, float]:
    """Both frequency roots for one spatial wave vector, upper branch first."""
    kvec = np.asarray(kvec, dtype=float)
    if kvec.shape != (3,):
        raise ValueError("spatial wave vector must be a 3-vector")
    roots = solve_k0_many(m, kvec[None, :])[0]
    return float(roots[0]), float(roots[1])


def make_plane_wave(m: MediumSpec, kvec, branch: str = BRANCH_A,
                    polarization: FourVector | None = None) -> PlaneWave:
    """On-shell plane wave for the given spatial wave vector and branch."""
    upper, lower = solve_k0(m, kvec)
    k0 = upper if branch == BRANCH_A else lower
    k = FourVector(np.concatenate(([k0], np.asarray(kvec, dtype=float))), LOWER)
    return PlaneWave(k=k, polarization=polarization, branch=branch)


def is_on_shell(m: MediumSpec, k: FourVector, tol: float = 1e-9) -> bool:
    return abs(dispersion_residual(m, k)) < tol * _wave_scale(k)


def cherenkov_parameter(m: MediumSpec) -> float:
    """kappa times squared spatial four-velocity, kappa*gamma^2*v^2.

    Crosses 1 exactly where n^2 v^2 does; reported for diagnostics."""
    return m.kappa * float(m.V.spatial @ m.V.spatial)


def cherenkov_regime(m: MediumSpec) -> bool:
    """True when the medium outruns its own phase speed, n^2 v^2 > 1.

    The equivalent four-velocity form kappa*gamma^2*v^2 > 1 is evaluated as
    a cross-check; the two can only disagree inside a rounding-width band
    around the threshold.
    """
    t_speed = m.n**2 * m.speed**2 - 1.0
    t_four = cherenkov_parameter(m) - 1.0
    if abs(t_speed) > DEGENERACY_BAND and abs(t_four) > DEGENERACY_BAND:
        if (t_speed > 0.0) != (t_four > 0.0):
            raise InvariantViolation("inconsistent Cherenkov threshold forms")
    return t_speed > 0.0


def _rotation_to_caller(m: MediumSpec) -> np.ndarray:
    """Columns: unit velocity axis and two transverse axes (identity at rest)."""
    v = np.asarray(m.velocity, dtype=float)
    speed = np.linalg.norm(v)
    if speed == 0.0:
        return np.eye(3)
    d = v / speed
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(d)))] = 1.0
    t = helper - (helper @ d) * d
    t /= np.linalg.norm(t)
    u = np.cross(d, t)
    return np.column_stack([d, t, u])


def _verify_surface_points(m: MediumSpec, k0: float, points: np.ndarray) -> None:
    for kvec in points:
        k = FourVector(np.concatenate(([k0], kvec)), LOWER)
        res = dispersion_residual(m, k)
        if abs(res) > 1e-8 * _wave_scale(k):
            raise InvariantViolation(
                f"constant-frequency surface point off shell: residual {res:.3e}"
            )


def classify_wave_surface(m: MediumSpec, k0: float) -> WaveSurface:
    """Classify the constant-frequency quadric and return its parameters.

    The classification is performed with the velocity rotated onto the
    first axis and reported back in the caller frame; 100 sampled surface
    points are checked against the shell residual before returning.
    """
    if k0 == 0.0:
        raise ValueError("frequency must be nonzero")
    kv2 = cherenkov_parameter(m)
    d = 1.0 - kv2
    speed_v = float(np.linalg.norm(m.V.spatial))  # gamma * v
    v0 = m.V.time

    if abs(d) < DEGENERACY_BAND:
        return WaveSurface(kind=DEGENERATE, center_offset=0.0, semi_axes=None, kappa_v2=kv2)

    center = -m.kappa * k0 * v0 * speed_v / d
    rot = _rotation_to_caller(m)
    grid = 10
    thetas = np.linspace(0.05, np.pi - 0.05, grid)
    phis = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)

    if d > 0.0:
        axial = m.n * abs(k0) / d
        transverse = m.n * abs(k0) / np.sqrt(d)
        pts = []
        for th in thetas:
            for ph in phis:
                local = np.array(
                    [
                        center + axial * np.cos(th),
                        transverse * np.sin(th) * np.cos(ph),
                        transverse * np.sin(th) * np.sin(ph),
                    ]
                )
                pts.append(rot @ local)
        _verify_surface_points(m, k0, np.asarray(pts))
        return WaveSurface(
            kind=ELLIPSOID,
            center_offset=center,
            semi_axes=(axial, transverse, transverse),
            kappa_v2=kv2,
        )

    # Two sheets: |d| (k1 - center)^2 - (k2^2 + k3^2) = n^2 k0^2 / |d|.
    axial = m.n * abs(k0) / abs(d)
    transverse = m.n * abs(k0) / np.sqrt(abs(d))
    pts = []
    us = np.linspace(0.0, 2.0, grid)
    for sheet in (1.0, -1.0):
        for u in us[: grid // 2]:
            for ph in phis:
                local = np.array(
                    [
                        center + sheet * axial * np.cosh(u),
                        transverse * np.sinh(u) * np.cos(ph),
                        transverse * np.sinh(u) * np.sin(ph),
                    ]
                )
                pts.append(rot @ local)
    _verify_surface_points(m, k0, np.asarray(pts))
    return WaveSurface(kind=TWO_SHEET_HYPERBOLOID, center_offset=center, semi_axes=None, kappa_v2=kv2)


def cherenkov_cone(m: MediumSpec, tol: float = 1e-10) -> float:
    """Half-angle (radians, about the axis opposite to the velocity) of the
    wave-vector cone on which the upper dispersion branch is negative.

    Found by bisection on the angle; the branch frequency is monotone in the
    angle so the sign change brackets the boundary.
    """
    if not cherenkov_regime(m):
        raise ValueError("medium is not in the Cherenkov regime")
    rot = _rotation_to_caller(m)
    axis = -rot[:, 0]
    trans = rot[:, 1]

    def upper_branch(theta: float) -> float:
        kvec = np.cos(theta) * axis + np.sin(theta) * trans
        return solve_k0(m, kvec)[0]

    lo, hi = 0.0, np.pi / 2.0
    if upper_branch(lo) >= 0.0:
        raise InvariantViolation("upper branch not negative along the cone axis")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if upper_branch(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def negative_branch_scan(m: MediumSpec, n_directions: int, seed: int = 0) -> np.ndarray:
    """Boolean mask over ``n_directions`` random unit wave vectors marking
    where the upper branch frequency is negative."""
    rng = np.random.default_rng(seed)
    dirs = rng.normal(size=(n_directions, 3))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    return solve_k0_many(m, dirs)[:, 0] < 0.0
