"""Isotropic nondispersive medium in uniform motion: constitutive machinery.

The medium model is a refractive index n, a relative permeability mu and a
constant 3-velocity, packaged with the transformation matrix that relates
vacuum and medium electrodynamics:

    M(p) = g + (n^p - 1) V (x) V        (valid for every integer p)

where V is the medium four-velocity.  p = 1 is the map itself, p = 2 turns
the constitutive relation into a double contraction, p = -1 inverts the map.

Field tensor component convention (pinned; "cycl" made explicit):

    F_10 = E_1   F_20 = E_2   F_30 = E_3
    F_12 = -B_3  F_23 = -B_1  F_31 = -B_2

and identically for the excitation tensor with (D, H) in place of (E, B).
All indices in the table are covariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .fourvec import (
    LOWER,
    METRIC,
    METRIC_SIGNATURE,
    UPPER,
    FourVector,
    InvariantViolation,
    Tensor2,
    four_velocity,
    lorentz_gamma,
    minkowski_dot,
)

if TYPE_CHECKING:
    from .dispersion import PlaneWave

CONSTITUTIVE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class MediumSpec:
    """Medium parameters: refractive index, permeability, lab-frame 3-velocity."""

    n: float
    mu: float = 1.0
    velocity: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("refractive index must be positive")
        if self.mu <= 0:
            raise ValueError("permeability must be positive")
        v = np.asarray(self.velocity, dtype=float)
        if v.shape != (3,):
            raise ValueError("velocity must be a 3-vector")
        if float(v @ v) >= 1.0:
            raise ValueError("superluminal medium velocity")
        v.setflags(write=False)
        object.__setattr__(self, "velocity", v)

    @property
    def eps(self) -> float:
        """Relative permittivity n^2 / mu."""
        return self.n**2 / self.mu

    @property
    def kappa(self) -> float:
        """Susceptibility-like parameter n^2 - 1 = eps*mu - 1."""
        return self.n**2 - 1.0

    @property
    def amplitude_scale(self) -> float:
        """sqrt(n/mu), the potential rescaling between medium and vacuum."""
        return float(np.sqrt(self.n / self.mu))

    @property
    def gamma(self) -> float:
        return lorentz_gamma(self.velocity)

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))

    @property
    def V(self) -> FourVector:
        """Medium four-velocity gamma*(1, v), covariant components."""
        return four_velocity(self.velocity)


def _index_power(n: float, p: int) -> float:
    # Closed-form n^p; repeated multiplication keeps small powers exact-ish.
    p = int(p)
    if abs(p) <= 8:
        out = 1.0
        for _ in range(abs(p)):
            out *= n
        return out if p >= 0 else 1.0 / out
    return float(np.exp(p * np.log(n)))


def medium_matrix(m: MediumSpec, p: int = 1) -> Tensor2:
    """p-th power of the vacuum-medium transformation matrix, both indices lower.

    Returns g + (n^p - 1) V (x) V.  The power law holds for every integer p,
    positive or negative; p = 0 gives the metric back.
    """
    vl = m.V.components
    return Tensor2(METRIC + (_index_power(m.n, p) - 1.0) * np.outer(vl, vl), (LOWER, LOWER))


def medium_matrix_mixed(m: MediumSpec, p: int = 1) -> Tensor2:
    """Mixed-index form of ``medium_matrix``: first slot lower, second upper.

    This is the version that acts directly on covariant component tuples.
    """
    vl = m.V.components
    vu = METRIC_SIGNATURE * vl
    return Tensor2(np.eye(4) + (_index_power(m.n, p) - 1.0) * np.outer(vl, vu), (LOWER, UPPER))


def field_tensor_from_eb(e_field, b_field) -> Tensor2:
    """Antisymmetric field tensor (lower indices) from E and B 3-vectors."""
    e = np.asarray(e_field)
    b = np.asarray(b_field)
    z = np.zeros((), dtype=np.result_type(e, b, float))
    f = np.array(
        [
            [z, -e[0], -e[1], -e[2]],
            [e[0], z, -b[2], b[1]],
            [e[1], b[2], z, -b[0]],
            [e[2], -b[1], b[0], z],
        ]
    )
    return Tensor2(f, (LOWER, LOWER))


def eb_from_field_tensor(f: Tensor2) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of ``field_tensor_from_eb``; exact round trip."""
    c = f.lowered().components
    e = np.array([c[1, 0], c[2, 0], c[3, 0]])
    b = np.array([-c[2, 3], -c[3, 1], -c[1, 2]])
    return e, b


def constitutive_h(m: MediumSpec, f: Tensor2) -> Tensor2:
    """Excitation tensor H for a given field tensor F.

    Computed two ways -- the explicit four-velocity form and the compact
    double contraction with the squared medium matrix -- and cross-checked
    entrywise; disagreement beyond tolerance raises InvariantViolation.
    """
    f = f.lowered()
    scale = max(1.0, float(np.max(np.abs(f.components))))
    if not f.is_antisymmetric(tol=1e-12 * scale):
        raise ValueError("field tensor must be antisymmetric")
    fc = f.components
    vl = m.V.components
    vu = METRIC_SIGNATURE * vl

    # Route 1: F + kappa (F_a V_b - F_b V_a) with F_a = F_ab V^b.
    fa = fc @ vu
    h1 = (fc + m.kappa * (np.outer(fa, vl) - np.outer(vl, fa))) / m.mu

    # Route 2: squared-matrix double contraction.
    m2 = medium_matrix_mixed(m, 2).components
    h2 = m2 @ fc @ m2.T / m.mu

    if not np.allclose(h1, h2, atol=CONSTITUTIVE_TOL * scale, rtol=0.0):
        raise InvariantViolation(
            "constitutive dual-form mismatch (index-variance bug): "
            f"max deviation {np.max(np.abs(h1 - h2)):.3e}"
        )
    return Tensor2(h2, (LOWER, LOWER))


@dataclass(frozen=True, eq=False)
class FieldTensors:
    """Field tensor F and excitation tensor H, both lower-index antisymmetric."""

    f: Tensor2
    h: Tensor2

    @classmethod
    def from_eb(cls, m: MediumSpec, e_field, b_field) -> "FieldTensors":
        f = field_tensor_from_eb(e_field, b_field)
        return cls(f=f, h=constitutive_h(m, f))

    @classmethod
    def from_field_tensor(cls, m: MediumSpec, f: Tensor2) -> "FieldTensors":
        return cls(f=f.lowered(), h=constitutive_h(m, f))

    @property
    def e_field(self) -> np.ndarray:
        return eb_from_field_tensor(self.f)[0]

    @property
    def b_field(self) -> np.ndarray:
        return eb_from_field_tensor(self.f)[1]

    @property
    def d_field(self) -> np.ndarray:
        return eb_from_field_tensor(self.h)[0]

    @property
    def h_field(self) -> np.ndarray:
        return eb_from_field_tensor(self.h)[1]


def gauge_scalar(m: MediumSpec, wave: "PlaneWave") -> complex:
    """Gauge scalar of a plane-wave potential.

    For amplitude a and wave vector k this is -i*(k.a + kappa (k.V)(a.V)),
    the momentum-space image of the medium Lorenz-type gauge condition.
    """
    k = wave.k.lowered()
    a = wave.polarization.lowered()
    val = minkowski_dot(k, a) + m.kappa * minkowski_dot(k, m.V) * minkowski_dot(a, m.V)
    return complex(-1j * val)


def wave_equation_residual(m: MediumSpec, wave: "PlaneWave") -> FourVector:
    """Momentum-space wave-operator image [-k^2 - kappa (k.V)^2] a.

    Vanishes exactly when k lies on the dispersion shell or the amplitude
    is zero.
    """
    k = wave.k.lowered()
    a = wave.polarization.lowered()
    shell = minkowski_dot(k, k) + m.kappa * minkowski_dot(k, m.V) ** 2
    return FourVector(-shell * a.components, LOWER)


def lagrangian_density(m: MediumSpec, fields: FieldTensors, gauge_value: float = 0.0) -> float:
    """Scalar -1/4 F:H - (1/(2 mu)) * gauge^2.

    The variational principle built on this density reproduces the medium
    Maxwell equations only when the gauge scalar is constrained to zero;
    the constraint is the caller's responsibility.
    """
    fc = fields.f.lowered().components
    h_uu = fields.h.raised().components
    return float(-0.25 * np.real((fc * h_uu).sum()) - gauge_value**2 / (2.0 * m.mu))


def conjugate_momenta(m: MediumSpec, fields: FieldTensors, gauge_value: float = 0.0) -> FourVector:
    """Canonically conjugate field momenta, returned as covariant components.

    The contravariant density is the time column of the excitation tensor
    minus (gauge/mu) times the time column of the squared medium matrix;
    lowering the free index gives the D-field-valued spatial part directly.
    """
    h = fields.h.lowered().components
    m2 = medium_matrix(m, 2).components
    pi = h[:, 0] - (gauge_value / m.mu) * m2[:, 0]
    return FourVector(pi, LOWER)


def plane_wave_amplitudes(m: MediumSpec, wave: "PlaneWave") -> tuple[Tensor2, Tensor2]:
    """Complex F and H amplitude tensors of a plane-wave potential.

    The physical fields at a point x are Re[amplitude * exp(-i k.x)].
    """
    k = wave.k.lowered().components
    a = wave.polarization.lowered().components
    f_hat = -1j * (np.outer(k, a) - np.outer(a, k))
    f = Tensor2(f_hat, (LOWER, LOWER))
    return f, constitutive_h(m, f)


def plane_wave_fields(m: MediumSpec, wave: "PlaneWave", x: FourVector | None = None) -> FieldTensors:
    """Real instantaneous field tensors of the wave at spacetime point x."""
    f_hat, h_hat = plane_wave_amplitudes(m, wave)
    if x is None:
        phase = 0.0
    else:
        phase = minkowski_dot(wave.k.lowered(), x.lowered())
    osc = np.exp(-1j * phase)
    f = Tensor2(np.real(f_hat.components * osc), (LOWER, LOWER))
    h = Tensor2(np.real(h_hat.components * osc), (LOWER, LOWER))
    return FieldTensors(f=f, h=h)
