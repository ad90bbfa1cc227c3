"""Minkowski four-vector and rank-2 tensor algebra over the metric diag(1, -1, -1, -1).

Index variance (upper vs lower) is tracked on the values themselves rather
than left to caller discipline; every contraction inserts the metric exactly
where the variance tags require it.  Since the metric is its own inverse and
has entries +-1, raising an index and lowering it again reproduces the
original components bit-for-bit.

Component convention used throughout the package: wave vectors, potentials,
currents, four-momenta and the medium four-velocity are stored as covariant
(lower-index) component tuples, e.g. a four-velocity is gamma*(1, v).
Contractions between two lower-index vectors then read u0*w0 - u.w.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UPPER = "upper"
LOWER = "lower"

METRIC_SIGNATURE = np.array([1.0, -1.0, -1.0, -1.0])
METRIC_SIGNATURE.setflags(write=False)
METRIC = np.diag(METRIC_SIGNATURE)
METRIC.setflags(write=False)


class InvariantViolation(RuntimeError):
    """An internal cross-check failed; usually signals an index-variance bug."""


def _flip(variance: str) -> str:
    return LOWER if variance == UPPER else UPPER


def _freeze(values, shape) -> np.ndarray:
    a = np.array(values, copy=True)
    if not np.issubdtype(a.dtype, np.number):
        raise ValueError(f"components must be numeric, got dtype {a.dtype}")
    a = a.astype(np.complex128 if np.iscomplexobj(a) else np.float64)
    if a.shape != shape:
        raise ValueError(f"expected shape {shape}, got {a.shape}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FourVector:
    """Four real or complex components plus an index-variance tag."""

    components: np.ndarray
    variance: str = LOWER

    def __post_init__(self):
        if self.variance not in (UPPER, LOWER):
            raise ValueError(f"unknown variance tag {self.variance!r}")
        object.__setattr__(self, "components", _freeze(self.components, (4,)))

    @property
    def time(self):
        return self.components[0]

    @property
    def spatial(self) -> np.ndarray:
        return self.components[1:]

    def with_variance(self, variance: str) -> "FourVector":
        if variance == self.variance:
            return self
        return FourVector(METRIC_SIGNATURE * self.components, variance)

    def raised(self) -> "FourVector":
        return self.with_variance(UPPER)

    def lowered(self) -> "FourVector":
        return self.with_variance(LOWER)

    def conjugated(self) -> "FourVector":
        return FourVector(np.conj(self.components), self.variance)

    def dot(self, other: "FourVector"):
        return minkowski_dot(self, other)

    def __add__(self, other: "FourVector") -> "FourVector":
        other = other.with_variance(self.variance)
        return FourVector(self.components + other.components, self.variance)

    def __sub__(self, other: "FourVector") -> "FourVector":
        other = other.with_variance(self.variance)
        return FourVector(self.components - other.components, self.variance)

    def __mul__(self, scalar) -> "FourVector":
        return FourVector(self.components * scalar, self.variance)

    __rmul__ = __mul__

    def __neg__(self) -> "FourVector":
        return FourVector(-self.components, self.variance)


@dataclass(frozen=True, eq=False)
class Tensor2:
    """4x4 component grid with one variance tag per index slot."""

    components: np.ndarray
    variance: tuple[str, str] = (LOWER, LOWER)

    def __post_init__(self):
        if tuple(self.variance) not in (
            (UPPER, UPPER),
            (UPPER, LOWER),
            (LOWER, UPPER),
            (LOWER, LOWER),
        ):
            raise ValueError(f"unknown variance tags {self.variance!r}")
        object.__setattr__(self, "variance", tuple(self.variance))
        object.__setattr__(self, "components", _freeze(self.components, (4, 4)))

    def with_variance(self, variance: tuple[str, str]) -> "Tensor2":
        variance = tuple(variance)
        comps = self.components
        if variance[0] != self.variance[0]:
            comps = METRIC_SIGNATURE[:, None] * comps
        if variance[1] != self.variance[1]:
            comps = comps * METRIC_SIGNATURE[None, :]
        if variance == self.variance:
            return self
        return Tensor2(comps, variance)

    def raised(self) -> "Tensor2":
        return self.with_variance((UPPER, UPPER))

    def lowered(self) -> "Tensor2":
        return self.with_variance((LOWER, LOWER))

    def transposed(self) -> "Tensor2":
        return Tensor2(self.components.T, (self.variance[1], self.variance[0]))

    def apply(self, vec: FourVector) -> FourVector:
        """Contract the second slot with ``vec``; the metric is inserted if needed."""
        w = vec.components
        if self.variance[1] == vec.variance:
            w = METRIC_SIGNATURE * w
        return FourVector(self.components @ w, self.variance[0])

    def compose(self, other: "Tensor2") -> "Tensor2":
        """Matrix product contracting this second slot with the other's first."""
        rhs = other.components
        if self.variance[1] == other.variance[0]:
            rhs = METRIC_SIGNATURE[:, None] * rhs
        return Tensor2(self.components @ rhs, (self.variance[0], other.variance[1]))

    def is_antisymmetric(self, tol: float = 0.0) -> bool:
        if tol == 0.0:
            return bool(np.array_equal(self.components, -self.components.T))
        return bool(np.allclose(self.components, -self.components.T, atol=tol, rtol=0.0))

    def is_symmetric(self, tol: float = 0.0) -> bool:
        if tol == 0.0:
            return bool(np.array_equal(self.components, self.components.T))
        return bool(np.allclose(self.components, self.components.T, atol=tol, rtol=0.0))

    def __add__(self, other: "Tensor2") -> "Tensor2":
        other = other.with_variance(self.variance)
        return Tensor2(self.components + other.components, self.variance)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        other = other.with_variance(self.variance)
        return Tensor2(self.components - other.components, self.variance)

    def __mul__(self, scalar) -> "Tensor2":
        return Tensor2(self.components * scalar, self.variance)

    __rmul__ = __mul__

    def __neg__(self) -> "Tensor2":
        return Tensor2(-self.components, self.variance)


def minkowski_dot(u: FourVector, v: FourVector):
    """Invariant scalar product u.v.

    For two vectors of the same variance the metric is inserted
    (u0*v0 - u.v); for mixed variance the contraction is a plain sum.
    No complex conjugation is applied; conjugate explicitly where needed.
    """
    if u.variance == v.variance:
        return (METRIC_SIGNATURE * u.components * v.components).sum().item()
    return (u.components * v.components).sum().item()


def double_contraction(a: Tensor2, b: Tensor2):
    """Full contraction a_{mu nu} b^{mu nu} honoring both variance tags."""
    dual = (_flip(a.variance[0]), _flip(a.variance[1]))
    return (a.components * b.with_variance(dual).components).sum().item()


def minkowski_trace(t: Tensor2):
    """Scalar g^{mu nu} t_{mu nu} (plain trace for mixed-variance input)."""
    if t.variance[0] != t.variance[1]:
        return np.trace(t.components).item()
    return (METRIC_SIGNATURE * np.diag(t.components)).sum().item()


def metric_tensor(variance: tuple[str, str] = (LOWER, LOWER)) -> Tensor2:
    return Tensor2(METRIC, variance)


def lorentz_gamma(velocity) -> float:
    velocity = np.asarray(velocity, dtype=float)
    speed2 = float(velocity @ velocity)
    if speed2 >= 1.0:
        raise ValueError("superluminal medium velocity")
    return 1.0 / np.sqrt(1.0 - speed2)


def four_velocity(velocity) -> FourVector:
    """Unit-norm four-velocity gamma*(1, v) for a 3-velocity with |v| < 1.

    Returned as covariant components; its dot with itself is exactly 1 up to
    rounding for any |v| < 1.
    """
    velocity = np.asarray(velocity, dtype=float)
    if velocity.shape != (3,):
        raise ValueError("velocity must be a 3-vector")
    g = lorentz_gamma(velocity)
    return FourVector(np.concatenate(([g], g * velocity)), LOWER)


def boost_matrix(velocity) -> Tensor2:
    """Pure Lorentz boost for 3-velocity v, |v| < 1.

    Acts on contravariant component columns; maps (1, 0, 0, 0) to
    gamma*(1, v) and satisfies  L^T g L = g.
    """
    velocity = np.asarray(velocity, dtype=float)
    if velocity.shape != (3,):
        raise ValueError("velocity must be a 3-vector")
    g = lorentz_gamma(velocity)
    lam = np.eye(4)
    speed2 = float(velocity @ velocity)
    if speed2 > 0.0:
        lam[0, 0] = g
        lam[0, 1:] = g * velocity
        lam[1:, 0] = g * velocity
        lam[1:, 1:] += (g - 1.0) * np.outer(velocity, velocity) / speed2
    return Tensor2(lam, (UPPER, LOWER))


def boost_four_vector(u: FourVector, velocity) -> FourVector:
    """Boost a four-vector, applying the variance-appropriate matrix."""
    velocity = np.asarray(velocity, dtype=float)
    if u.variance == UPPER:
        lam = boost_matrix(velocity).components
    else:
        # Covariant components transform with g L g = L(-v).
        lam = boost_matrix(-velocity).components
    return FourVector(lam @ u.components, u.variance)


def boost_tensor(t: Tensor2, velocity) -> Tensor2:
    """Boost a rank-2 tensor slot by slot."""
    velocity = np.asarray(velocity, dtype=float)
    mats = []
    for slot in t.variance:
        if slot == UPPER:
            mats.append(boost_matrix(velocity).components)
        else:
            mats.append(boost_matrix(-velocity).components)
    return Tensor2(mats[0] @ t.components @ mats[1].T, t.variance)
