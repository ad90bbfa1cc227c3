"""Acceptance suite.

One test per acceptance criterion, each at its stated tolerance and runtime
budget; run with ``pytest tests/test_acceptance.py -v -s`` to see one
printed line per criterion.
"""

import time

import numpy as np
import pytest

from medmap import (
    DEGENERATE,
    ELLIPSOID,
    EPS0,
    NULL,
    SPACELIKE,
    TWO_SHEET_HYPERBOLOID,
    FieldTensors,
    FourVector,
    MediumSpec,
    PlaneWave,
    Tensor2,
    abraham_force,
    abraham_torque,
    cell_four_momentum,
    cherenkov_parameter,
    classify_wave_surface,
    constitutive_h,
    dispersion_residual,
    make_plane_wave,
    map_four_momentum,
    map_point,
    map_polarization,
    map_potential_to_medium,
    map_potential_to_vacuum,
    map_wavevector,
    medium_matrix_mixed,
    medium_polarization_basis,
    minkowski_dot,
    minkowski_tensor,
    minkowski_trace,
    mirror_pressure,
    plane_wave_fields,
    polarization_sum,
    solve_k0_many,
    surface_force_integral,
    transverse_plane_wave,
    vacuum_polarization_basis,
)
from medmap.emtensor import SOURCE_CANONICAL, SOURCE_MINKOWSKI
from medmap.fourvec import METRIC_SIGNATURE


def _finish(number: int, name: str, started: float, limit: float) -> None:
    elapsed = time.perf_counter() - started
    assert elapsed < limit, f"criterion {number} exceeded its {limit:.0f}s budget ({elapsed:.2f}s)"
    print(f"criterion {number:2d} [{name}]: PASS ({elapsed:.3f}s < {limit:.0f}s)")


def _random_medium(rng, n_range=(1.0, 2.5), v_max=0.9, mu_range=(0.5, 2.0)):
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    return MediumSpec(
        n=rng.uniform(*n_range),
        mu=rng.uniform(*mu_range),
        velocity=tuple(rng.uniform(0.0, v_max) * direction),
    )


def _random_null(rng):
    spatial = rng.normal(size=3)
    return FourVector(
        np.concatenate(([rng.choice([-1.0, 1.0]) * np.linalg.norm(spatial)], spatial))
    )


def test_criterion_01_jones_ratio():
    started = time.perf_counter()
    rng = np.random.default_rng(1)
    for _ in range(100):
        n = rng.uniform(1.0, 2.0)
        reflectivity = rng.uniform(0.0, 1.0)
        poynting = rng.uniform(1.0, 1e6)
        ratio = mirror_pressure(n, reflectivity, poynting) / mirror_pressure(
            1.0, reflectivity, poynting
        )
        assert abs(ratio - n) <= 1e-12 * n
    _finish(1, "Jones ratio proportional to index", started, 1.0)


def test_criterion_02_dispersion_shell_transport():
    started = time.perf_counter()
    rng = np.random.default_rng(2)
    for _ in range(1000):
        m = _random_medium(rng)
        k = map_wavevector(m, _random_null(rng))
        scale = 1.0 + float(np.sum(np.abs(k.components) ** 2))
        assert abs(dispersion_residual(m, k)) < 1e-9 * scale
    _finish(2, "null vectors land on the dispersion shell", started, 1.0)


def test_criterion_03_cherenkov_branch_cone():
    started = time.perf_counter()
    rng = np.random.default_rng(3)
    directions = rng.normal(size=(10**5, 3))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    directions[0] = (-1.0, 0.0, 0.0)  # include the cone axis

    fast = MediumSpec(n=1.5, velocity=(0.8, 0.0, 0.0))
    negative = solve_k0_many(fast, directions)[:, 0] < 0.0
    assert np.any(negative)
    angles = np.arccos(np.clip(directions[negative] @ np.array([-1.0, 0.0, 0.0]), -1, 1))
    boundary = np.arccos(1.0 / np.sqrt(cherenkov_parameter(fast)))
    assert np.max(angles) <= boundary + 1e-9  # negatives confined to the cone

    slow = MediumSpec(n=1.5, velocity=(0.6, 0.0, 0.0))  # n v = 0.9
    assert not np.any(solve_k0_many(slow, directions)[:, 0] < 0.0)
    _finish(3, "negative branch exists only above threshold", started, 5.0)


def test_criterion_04_surface_classification_transition():
    started = time.perf_counter()

    def kind_at(speed):
        return classify_wave_surface(MediumSpec(n=1.5, velocity=(speed, 0, 0)), 1.0).kind

    coarse = [kind_at(v) for v in np.linspace(0.0, 0.9, 19)]
    flip = coarse.index(TWO_SHEET_HYPERBOLOID)
    assert all(k == ELLIPSOID for k in coarse[:flip])
    assert all(k == TWO_SHEET_HYPERBOLOID for k in coarse[flip:])

    lo, hi = 0.6, 0.7
    assert kind_at(lo) == ELLIPSOID and kind_at(hi) == TWO_SHEET_HYPERBOLOID
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if kind_at(mid) == ELLIPSOID:
            lo = mid
        else:
            hi = mid
    assert abs(0.5 * (lo + hi) - 2.0 / 3.0) <= 1e-6  # documented threshold 1/n
    assert kind_at(2.0 / 3.0) == DEGENERATE
    _finish(4, "ellipsoid/degenerate/hyperboloid at the threshold", started, 5.0)


def test_criterion_05_constitutive_dual_form():
    started = time.perf_counter()
    rng = np.random.default_rng(5)
    for _ in range(100):
        m = _random_medium(rng)
        a = rng.normal(size=(4, 4))
        fc = a - a.T
        # explicit four-velocity form
        vl = m.V.components
        vu = METRIC_SIGNATURE * vl
        fa = fc @ vu
        route_1 = (fc + m.kappa * (np.outer(fa, vl) - np.outer(vl, fa))) / m.mu
        # compact squared-matrix form (what the library returns)
        route_2 = constitutive_h(m, Tensor2(fc)).components
        assert np.max(np.abs(route_1 - route_2)) < 1e-10 * max(1.0, np.max(np.abs(fc)))
    _finish(5, "constitutive relation dual-form equivalence", started, 1.0)


def test_criterion_06_polarization_sums():
    started = time.perf_counter()
    rng = np.random.default_rng(6)
    for which in ("vacuum", "medium"):
        for _ in range(100):
            m = _random_medium(rng)
            l = _random_null(rng)
            wavevector = l if which == "vacuum" else map_wavevector(m, l)
            basis = (
                vacuum_polarization_basis(m, wavevector)
                if which == "vacuum"
                else medium_polarization_basis(m, wavevector)
            )
            lhs = np.zeros((4, 4), dtype=complex)
            for vec in basis.vectors:
                lhs += np.outer(vec.components, np.conj(vec.components))
            closed = polarization_sum(m, wavevector, which).components
            assert np.max(np.abs(lhs - closed)) < 1e-9 * max(1.0, np.max(np.abs(closed)))
    _finish(6, "covariant polarization sums, both shells", started, 2.0)


def test_criterion_07_minkowski_tensor_structure():
    started = time.perf_counter()
    rng = np.random.default_rng(7)
    for _ in range(100):
        m = _random_medium(rng)
        a = rng.normal(size=(4, 4))
        f = a - a.T
        s = minkowski_tensor(FieldTensors.from_field_tensor(m, Tensor2(f)))
        assert abs(minkowski_trace(s)) < 1e-10 * float(np.sum(f**2))

    m = MediumSpec(n=1.6, mu=1.2, velocity=(0.4, -0.1, 0.2))
    kvec = np.array([0.8, 0.5, -0.3])
    wave = transverse_plane_wave(m, kvec)
    wavelength = 2.0 * np.pi / np.linalg.norm(kvec)
    step = 1e-5 * wavelength

    def flux_at(xc):
        return minkowski_tensor(plane_wave_fields(m, wave, FourVector(xc))).components

    s_scale = np.max(np.abs(flux_at(np.zeros(4))))
    for _ in range(3):
        x0 = rng.normal(size=4)
        divergence = np.zeros(4)
        for nu in range(4):
            dx = np.zeros(4)
            dx[nu] = step
            divergence += (flux_at(x0 + dx) - flux_at(x0 - dx))[:, nu] / (2.0 * step)
        assert np.max(np.abs(divergence)) < 1e-6 * s_scale / wavelength
    _finish(7, "flux tensor traceless and divergence-free", started, 2.0)


def test_criterion_08_canonical_minkowski_momentum():
    started = time.perf_counter()
    rng = np.random.default_rng(8)
    for _ in range(20):
        m = _random_medium(rng, n_range=(1.05, 2.5), v_max=0.8)
        wave = transverse_plane_wave(m, rng.normal(size=3), lam=int(rng.choice([2, 3])))
        p_flux = cell_four_momentum(m, wave, SOURCE_MINKOWSKI).momentum.components
        p_can = cell_four_momentum(m, wave, SOURCE_CANONICAL).momentum.components
        assert np.max(np.abs(p_flux - p_can)) < 1e-9 * np.max(np.abs(p_flux))
    _finish(8, "canonical and flux cell momenta agree", started, 2.0)


def test_criterion_09_spacelike_classification():
    started = time.perf_counter()
    rng = np.random.default_rng(9)
    for _ in range(30):
        m = _random_medium(rng, n_range=(1.001, 2.5), v_max=0.8)
        wave = transverse_plane_wave(m, rng.normal(size=3))
        for source in (SOURCE_MINKOWSKI, SOURCE_CANONICAL):
            assert cell_four_momentum(m, wave, source).classification == SPACELIKE
    for _ in range(10):
        vacuum = MediumSpec(n=1.0, velocity=tuple(rng.uniform(-0.5, 0.5, 3)))
        wave = transverse_plane_wave(vacuum, rng.normal(size=3))
        assert cell_four_momentum(vacuum, wave).classification == NULL
    _finish(9, "single-mode momenta spacelike (null in vacuum)", started, 1.0)


def test_criterion_10_abraham_torque_magnitude():
    started = time.perf_counter()
    for radius in np.linspace(50e-6, 150e-6, 11):
        torque = abraham_torque(power=100.0, modulation=1000.0, ring_radius=radius, n=1.45)
        assert 1e-20 <= torque <= 1e-18  # within one decade of 1e-19 N m
    _finish(10, "ring-model torque lands at the expected decade", started, 1.0)


def test_criterion_11_force_averaging_and_profile_independence():
    started = time.perf_counter()
    omega, amplitude = 2.0 * np.pi * 5e14, 1e4
    times = np.linspace(0.0, np.pi / omega, 40000, endpoint=False)
    ds_dt = -amplitude * omega * np.sin(2.0 * omega * times)
    values = np.array([abraham_force(1.33, (s, 0, 0))[0] for s in ds_dt])
    assert abs(np.mean(values)) < 1e-12 * np.max(np.abs(values))

    def smoothstep(s):
        return s * s * (3.0 - 2.0 * s)

    profiles = [
        lambda s: 1.0 + 0.77 * s,
        lambda s: 1.0 + 0.77 * smoothstep(s),
        lambda s: 1.0 + 0.77 * 0.5 * (1.0 - np.cos(np.pi * s)),
    ]
    values = [surface_force_integral(profile, 1e6) for profile in profiles]
    expected = -0.5 * EPS0 * 1e12 * 0.77
    for value in values:
        assert abs(value - expected) < 1e-9 * abs(expected)
    _finish(11, "oscillatory force averages out; boundary integral is shape-free", started, 1.0)


def test_criterion_12_mapping_round_trips():
    started = time.perf_counter()
    rng = np.random.default_rng(12)
    for _ in range(1000):
        m = _random_medium(rng)

        x = FourVector(rng.normal(size=4))
        back = map_point(m, map_point(m, x), inverse=True)
        assert np.max(np.abs(back.components - x.components)) < 1e-12 * (
            1.0 + np.max(np.abs(x.components))
        )

        l = _random_null(rng)
        k = map_wavevector(m, l)
        l_back = map_wavevector(m, k, inverse=True)
        assert np.max(np.abs(l_back.components - l.components)) < 1e-12 * (
            1.0 + np.max(np.abs(l.components))
        )

        wave = PlaneWave(k=k, polarization=FourVector(rng.normal(size=4)))
        wave_back = map_potential_to_medium(m, map_potential_to_vacuum(m, wave))
        assert np.max(np.abs(wave_back.polarization.components - wave.polarization.components)) < 1e-12 * (
            1.0 + np.max(np.abs(wave.polarization.components))
        )

        basis = vacuum_polarization_basis(m, l)
        basis_back = map_polarization(m, map_polarization(m, basis), inverse=True)
        for a, b in zip(basis_back.vectors, basis.vectors):
            assert np.max(np.abs(a.components - b.components)) < 1e-12 * (
                1.0 + np.max(np.abs(b.components))
            )

        p = FourVector(rng.normal(size=4))
        p_back = map_four_momentum(m, map_four_momentum(m, p), inverse=True)
        assert np.max(np.abs(p_back.components - p.components)) < 1e-12 * (
            1.0 + np.max(np.abs(p.components))
        )
    _finish(12, "all maps invert to the identity", started, 2.0)
