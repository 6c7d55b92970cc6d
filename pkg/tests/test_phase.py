import math
from dataclasses import replace

import numpy as np
import pytest

from src.common.errors import (
    CollisionError,
    DomainError,
    GeometryError,
    NoSolutionError,
)
from src.designer.experiment import build_config
from src.physics.casimir import TestMassSpec
from src.physics.constants import CONSTANTS
from src.physics.kinematics import DriveSpec, GeometrySpec, full_profile
from src.physics.phase import (
    effective_phase_static,
    max_phase_original,
    min_mass_for_phase,
    pairwise_phases,
    small_split_limit,
    step1_phase,
    step2_phase,
    step3_phase,
    step_phase_quadrature,
    total_phase,
)

A = 157e-6
STRONG = {"dB": 1e6, "tau": 0.5, "t_int": 2.5}


def _c(dB: float, tau: float) -> float:
    return 2 * CONSTANTS.g_factor * CONSTANTS.mu_B * dB * (tau / 2) ** 2


def test_pairwise_without_split():
    _, ud, du = pairwise_phases(1e-15, 50e-6, 0.0, 1.0)
    assert ud == 0.0
    assert du == 0.0


def test_pairwise_sum_is_effective_phase():
    rng = np.random.default_rng(11)
    for _ in range(200):
        m = 10 ** rng.uniform(-16, -13)
        d = 10 ** rng.uniform(-5, -3)
        dx = rng.uniform(0.0, 0.9) * d
        t = rng.uniform(0.1, 3.0)
        _, ud, du = pairwise_phases(m, d, dx, t)
        assert math.isclose(
            ud + du, effective_phase_static(m, d, dx, t), rel_tol=1e-9
        )


def test_static_phase_rejects_overlap():
    with pytest.raises(GeometryError):
        effective_phase_static(1e-15, 1e-5, 1e-5, 1.0)


def test_max_phase_is_static_at_closest_approach():
    m, dx, t = 1e-14, 4e-5, 2.5
    assert math.isclose(
        max_phase_original(m, dx, A, t),
        effective_phase_static(m, A + dx, dx, t),
        rel_tol=1e-12,
    )


@pytest.mark.parametrize(
    ("phi", "expected"), [(1.0, 2e-14), (0.1, 4e-15), (0.01, 1e-15)]
)
def test_min_mass_for_phase(phi, expected):
    mass = min_mass_for_phase(phi, A, **STRONG)
    assert expected / 2 < mass < expected * 2
    dx = _c(1e6, 0.5) / mass
    assert math.isclose(
        max_phase_original(mass, dx, A, 2.5), phi, rel_tol=1e-6
    )


def test_min_mass_unreachable_target():
    with pytest.raises(NoSolutionError):
        min_mass_for_phase(10.0, A, **STRONG)
    with pytest.raises(DomainError):
        min_mass_for_phase(0.0, A, **STRONG)


def test_small_split_limit():
    assert 3.4e-4 < small_split_limit(1e4, 0.5, 2.5, A) < 4.6e-4
    mass = 1.5e-13
    dx = _c(1e4, 0.5) / mass
    assert math.isclose(
        max_phase_original(mass, dx, A, 2.5),
        small_split_limit(1e4, 0.5, 2.5, A),
        rel_tol=1e-2,
    )


def test_step2_without_drift_is_static():
    spec = TestMassSpec(1e-15, 3500.0, 1.0)
    geom = GeometrySpec(57.0, 1e-6)
    drive = DriveSpec(1e4, 0.5, 1.0)
    profile = full_profile(spec, geom, drive)
    assert profile.s_max == 0.0
    d = profile.split_size + profile.inner_separation
    assert math.isclose(
        step2_phase(1e-15, profile),
        effective_phase_static(1e-15, d, profile.split_size, 1.0),
        rel_tol=1e-9,
    )


def test_step2_flagship(flagship, flagship_profile):
    phase = step2_phase(flagship.mass_spec.mass, flagship_profile)
    assert math.isclose(phase, 0.0105, rel_tol=0.3)


def test_step2_converges_with_step(flagship):
    fine = replace(flagship.drive, time_step=5e-5)
    spec, geom = flagship.mass_spec, flagship.geometry
    coarse_phase = step2_phase(
        spec.mass, full_profile(spec, geom, flagship.drive)
    )
    fine_phase = step2_phase(spec.mass, full_profile(spec, geom, fine))
    assert math.isclose(coarse_phase, fine_phase, rel_tol=1e-6)


def test_split_closed_form_matches_quadrature():
    rng = np.random.default_rng(2024)
    m = 1e-15
    for _ in range(1000):
        a = 10 ** rng.uniform(-5, -3)
        tau = rng.uniform(0.1, 1.0)
        dx = 2 * a * (tau / 2) ** 2
        d = dx / rng.uniform(0.05, 0.9)
        near, far = step_phase_quadrature(m, d, a, tau)
        assert math.isclose(
            step1_phase(m, d, a, tau), near + far, rel_tol=1e-8
        )


def test_step3_without_drift_is_step1():
    m, d, a, tau = 1e-15, 46.5e-6, 1.8548e-4, 0.5
    assert step3_phase(m, d, 0.0, a, tau) == step1_phase(m, d, a, tau)


def test_split_phase_without_drive():
    assert step1_phase(1e-15, 46.5e-6, 0.0, 0.5) == 0.0
    assert step_phase_quadrature(1e-15, 46.5e-6, 1e-4, 0.0) == (0.0, 0.0)


def test_total_phase_flagship(flagship, flagship_profile):
    phase = total_phase(flagship, profile=flagship_profile)
    assert math.isclose(phase.total, 0.015, rel_tol=0.3)
    assert phase.step1 > 0
    assert phase.step3 > phase.step1
    assert math.isclose(
        phase.total, phase.step1 + phase.step2 + phase.step3, rel_tol=1e-12
    )
    assert math.isclose(
        phase.dphi_ud + phase.dphi_du, phase.total, rel_tol=1e-12
    )
    assert phase.dphi_du > 0 > phase.dphi_ud
    assert set(phase.as_record()) >= {"total_rad", "step2_rad"}


def test_total_phase_scales_as_mass_squared():
    base = build_config({})
    # та же траектория: a_mag и N*R не меняются
    scaled = build_config(
        {
            "mass_kg": 2e-15,
            "field_gradient_T_per_m": 2e4,
            "N": 57.0 / 2 ** (1 / 3),
        }
    )
    assert math.isclose(
        total_phase(scaled).total / total_phase(base).total,
        4.0,
        rel_tol=1e-9,
    )


def test_total_phase_grows_with_flight_time():
    totals = [
        total_phase(build_config({"t_int_s": t})).total
        for t in (0.5, 1.0, 1.2)
    ]
    assert totals == sorted(totals)
    assert totals[0] < totals[-1]


def test_long_flight_hits_plate():
    with pytest.raises(CollisionError) as info:
        total_phase(build_config({"t_int_s": 1.5}))
    assert 1.4 < info.value.time < 1.5


def test_total_phase_without_gradient():
    phase = total_phase(build_config({"field_gradient_T_per_m": 0.0}))
    assert phase.total == 0.0
