"""Vacuum <-> medium mapping of points, waves, currents and momenta.

Every map is a rescaled application of the medium transformation matrix:
points go to points with time stretched by n in the rest frame, vacuum
photon wave vectors land exactly on the medium dispersion shell, potentials
pick up the amplitude factor sqrt(n/mu), currents the inverse one.  The
maps are exact linear algebra, so all of them compose with their inverses
to the identity up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .dispersion import PlaneWave, dispersion_residual, is_on_shell, solve_k0
from .fourvec import (
    LOWER,
    METRIC,
    FourVector,
    InvariantViolation,
    Tensor2,
    boost_four_vector,
    minkowski_dot,
)
from .medium import MediumSpec, medium_matrix, medium_matrix_mixed

NULL_TOL = 1e-10
NORMALIZATION_TOL = 1e-8

PotentialField = Callable[[FourVector], FourVector]


@dataclass(frozen=True, eq=False)
class PolarizationBasis:
    """Wave vector plus two transverse polarization four-vectors.

    Built in the medium rest frame with the two spatial vectors crossing to
    the unit wave direction, then transported to the lab frame; each vector
    satisfies e . conj(e) = -1.
    """

    wavevector: FourVector
    e2: FourVector
    e3: FourVector

    @property
    def vectors(self) -> tuple[FourVector, FourVector]:
        return (self.e2, self.e3)


def _scale(vec: FourVector) -> float:
    return 1.0 + float(np.sum(np.abs(vec.components) ** 2))


def map_point(m: MediumSpec, x: FourVector, inverse: bool = False) -> FourVector:
    """Spacetime point map: vacuum-side x to medium-side y (inverse undoes it)."""
    matrix = medium_matrix_mixed(m, -1 if inverse else 1)
    return matrix.apply(x.lowered())


def map_wavevector(m: MediumSpec, wavevector: FourVector, inverse: bool = False) -> FourVector:
    """Map a null vacuum wave vector onto the medium dispersion shell.

    With ``inverse=True`` takes an on-shell medium wave vector back to a
    null vacuum one.  Off-domain input raises ValueError; the output shell
    membership is re-checked and raises InvariantViolation on failure.
    """
    wv = wavevector.lowered()
    if inverse:
        if abs(dispersion_residual(m, wv)) > NULL_TOL * _scale(wv):
            raise ValueError("input is not on the medium dispersion shell")
        out = medium_matrix_mixed(m, 1).apply(wv)
        if abs(minkowski_dot(out, out)) > 1e-9 * _scale(out):
            raise InvariantViolation("mapped wave vector is not null")
        return out
    if abs(minkowski_dot(wv, wv)) > NULL_TOL * _scale(wv):
        raise ValueError("input is not a vacuum photon")
    out = medium_matrix_mixed(m, -1).apply(wv)
    if abs(dispersion_residual(m, out)) > 1e-9 * _scale(out):
        raise InvariantViolation("mapped wave vector is off the dispersion shell")
    return out


def map_potential_to_vacuum(m: MediumSpec, potential: "PlaneWave | PotentialField"):
    """Medium potential to vacuum potential.

    Plane waves map by the amplitude rule e = scale * M a together with the
    wave-vector rule l = M k; a callable potential maps pointwise, sampling
    the medium side at the mapped point.
    """
    matrix = medium_matrix_mixed(m, 1)
    rho = m.amplitude_scale
    if isinstance(potential, PlaneWave):
        if potential.polarization is None:
            raise ValueError("plane wave carries no polarization amplitude")
        l_vec = matrix.apply(potential.k.lowered())
        amplitude = rho * matrix.apply(potential.polarization.lowered())
        return PlaneWave(k=l_vec, polarization=amplitude, branch=None)

    def vacuum_potential(x: FourVector) -> FourVector:
        y = map_point(m, x)
        return rho * matrix.apply(potential(y).lowered())

    return vacuum_potential


def map_potential_to_medium(m: MediumSpec, potential: "PlaneWave | PotentialField"):
    """Inverse of ``map_potential_to_vacuum``."""
    matrix = medium_matrix_mixed(m, -1)
    rho = m.amplitude_scale
    if isinstance(potential, PlaneWave):
        if potential.polarization is None:
            raise ValueError("plane wave carries no polarization amplitude")
        k_vec = matrix.apply(potential.k.lowered())
        amplitude = (1.0 / rho) * matrix.apply(potential.polarization.lowered())
        return PlaneWave(k=k_vec, polarization=amplitude, branch=None)

    def medium_potential(y: FourVector) -> FourVector:
        x = map_point(m, y, inverse=True)
        return (1.0 / rho) * matrix.apply(potential(x).lowered())

    return medium_potential


def map_current(m: MediumSpec, current, k: FourVector | None = None, inverse: bool = False):
    """Current-density map between medium and vacuum.

    ``current`` is either a callable four-current field (mapped pointwise)
    or a plane-wave amplitude four-vector, in which case the wave vector
    ``k`` is required and medium continuity k . j = 0 is enforced.
    """
    rho_mu = m.amplitude_scale * m.mu
    if callable(current):
        if inverse:
            matrix = medium_matrix_mixed(m, 1)

            def medium_current(y: FourVector) -> FourVector:
                x = map_point(m, y, inverse=True)
                return (1.0 / rho_mu) * matrix.apply(current(x).lowered())

            return medium_current

        matrix = medium_matrix_mixed(m, -1)

        def vacuum_current(x: FourVector) -> FourVector:
            y = map_point(m, x)
            return rho_mu * matrix.apply(current(y).lowered())

        return vacuum_current

    if k is None:
        raise ValueError("plane-wave current requires its wave vector")
    amplitude = current.lowered()
    kl = k.lowered()
    if inverse:
        j_med = (1.0 / rho_mu) * medium_matrix_mixed(m, 1).apply(amplitude)
        k_med = medium_matrix_mixed(m, -1).apply(kl)
        return j_med, k_med
    cont = minkowski_dot(kl, amplitude)
    if abs(cont) > 1e-8 * np.sqrt(_scale(kl) * _scale(amplitude)):
        raise ValueError(f"plane-wave current violates medium continuity: k.j = {cont:.3e}")
    j_vac = rho_mu * medium_matrix_mixed(m, -1).apply(amplitude)
    l_vec = medium_matrix_mixed(m, 1).apply(kl)
    return j_vac, l_vec


def _transverse_triad(direction: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(direction)))] = 1.0
    t2 = helper - (helper @ direction) * direction
    t2 /= np.linalg.norm(t2)
    t3 = np.cross(direction, t2)
    return t2, t3


def vacuum_polarization_basis(m: MediumSpec, l: FourVector) -> PolarizationBasis:
    """Transverse polarization pair for a null vacuum wave vector.

    Constructed by Gram-Schmidt in the medium rest frame, where the two
    spatial vectors cross to the unit wave direction, then boosted back.
    """
    lvec = l.lowered()
    if abs(minkowski_dot(lvec, lvec)) > NULL_TOL * _scale(lvec):
        raise ValueError("input is not a vacuum photon")
    rest = boost_four_vector(lvec, m.velocity)
    spatial = np.real(rest.components[1:])
    norm = np.linalg.norm(spatial)
    if norm == 0.0:
        raise ValueError("zero wave vector has no polarization basis")
    t2, t3 = _transverse_triad(spatial / norm)
    vecs = []
    for t in (t2, t3):
        rest_vec = FourVector(np.concatenate(([0.0], t)), LOWER)
        vecs.append(boost_four_vector(rest_vec, -np.asarray(m.velocity)))
    return PolarizationBasis(wavevector=lvec, e2=vecs[0], e3=vecs[1])


def medium_polarization_basis(m: MediumSpec, k: FourVector) -> PolarizationBasis:
    """Transverse polarization pair for an on-shell medium wave vector."""
    l_vec = map_wavevector(m, k, inverse=True)
    return map_polarization(m, vacuum_polarization_basis(m, l_vec))


def _check_normalized(basis: PolarizationBasis) -> None:
    for vec in basis.vectors:
        norm = minkowski_dot(vec, vec.conjugated())
        if abs(norm + 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"polarization basis is not normalized: e.conj(e) = {norm}")


def map_polarization(m: MediumSpec, basis: PolarizationBasis, inverse: bool = False) -> PolarizationBasis:
    """Map a polarization basis between vacuum and medium shells."""
    _check_normalized(basis)
    matrix = medium_matrix_mixed(m, 1 if inverse else -1)
    wavevector = map_wavevector(m, basis.wavevector, inverse=inverse)
    return PolarizationBasis(
        wavevector=wavevector,
        e2=matrix.apply(basis.e2.lowered()),
        e3=matrix.apply(basis.e3.lowered()),
    )


def polarization_sum(m: MediumSpec, wavevector: FourVector, which: str = "vacuum") -> Tensor2:
    """Covariant transverse polarization sum, verified against its closed form.

    The left side is assembled from an explicit basis, the right side from
    the closed form; disagreement raises InvariantViolation.  Returns the
    closed form with both indices lower.
    """
    wv = wavevector.lowered()
    vl = m.V.components
    wv_dot_v = minkowski_dot(wv, m.V)
    if abs(wv_dot_v) < 1e-12 * np.sqrt(_scale(wv)):
        raise ValueError("singular configuration: wave vector orthogonal to the four-velocity")
    kc = wv.components

    if which == "vacuum":
        basis = vacuum_polarization_basis(m, wv)
        closed = (
            -METRIC
            - np.outer(kc, kc) / wv_dot_v**2
            + (np.outer(kc, vl) + np.outer(vl, kc)) / wv_dot_v
        )
    elif which == "medium":
        if not is_on_shell(m, wv):
            raise ValueError("input is not on the medium dispersion shell")
        basis = medium_polarization_basis(m, wv)
        n2 = m.n**2
        closed = (
            -medium_matrix(m, -2).components
            - np.outer(kc, kc) / (n2 * wv_dot_v**2)
            + (np.outer(kc, vl) + np.outer(vl, kc)) / (n2 * wv_dot_v)
        )
    else:
        raise ValueError(f"unknown polarization-sum side {which!r}")

    lhs = np.zeros((4, 4), dtype=complex)
    for vec in basis.vectors:
        c = vec.lowered().components
        lhs += np.outer(c, np.conj(c))
    tol = 1e-10 * max(1.0, float(np.max(np.abs(closed))))
    if not np.allclose(lhs, closed, atol=tol, rtol=0.0):
        raise InvariantViolation(
            "polarization sum mismatch between basis and closed form: "
            f"max deviation {np.max(np.abs(lhs - closed)):.3e}"
        )
    return Tensor2(np.real(closed), (LOWER, LOWER))


def map_four_momentum(m: MediumSpec, momentum: FourVector, inverse: bool = False) -> FourVector:
    """Vacuum four-momentum to its medium (Minkowski) counterpart."""
    return medium_matrix_mixed(m, 1 if inverse else -1).apply(momentum.lowered())


def singular_support(m: MediumSpec, k: FourVector) -> tuple[float, int]:
    """Support data of the invariant singular function: the shell residual
    and the sign of the frequency seen in the medium rest frame.

    Cross-checks the residual against the squared norm of the mapped vacuum
    wave vector, which is the same quantity computed through the map.
    """
    kl = k.lowered()
    residual = dispersion_residual(m, kl)
    mapped = medium_matrix_mixed(m, 1).apply(kl)
    mapped_residual = float(np.real(minkowski_dot(mapped, mapped)))
    if abs(residual - mapped_residual) > 1e-10 * _scale(kl):
        raise InvariantViolation("singular-function support mismatch between direct and mapped forms")
    return residual, int(np.sign(np.real(minkowski_dot(kl, m.V))))


def mode_normalization(m: MediumSpec, kvec) -> float:
    """Classical per-mode normalization sqrt(mu / ((1 + kappa V0^2)(k_a - k_b))).

    Reduces to the familiar 1/sqrt(2 omega) in the vacuum limit.
    """
    upper, lower = solve_k0(m, kvec)
    v0 = m.V.time
    return float(np.sqrt(m.mu / ((1.0 + m.kappa * v0**2) * (upper - lower))))


def transverse_plane_wave(m: MediumSpec, kvec, branch: str = "a", lam: int = 2,
                          amplitude: complex = 1.0) -> PlaneWave:
    """On-shell plane wave polarized along one of the transverse basis vectors."""
    wave = PlaneWave(
        k=FourVector(np.concatenate(([solve_k0(m, kvec)[0 if branch == "a" else 1]],
                                     np.asarray(kvec, dtype=float))), LOWER),
        branch=branch,
    )
    basis = medium_polarization_basis(m, wave.k)
    pol = basis.e2 if lam == 2 else basis.e3
    return PlaneWave(k=wave.k, polarization=amplitude * pol, branch=branch)
