import math

import numpy as np
import pytest

from src.common.errors import DomainError, GeometryError, ValidationError
from src.physics.casimir import (
    TestMassSpec,
    acceleration_constant,
    casimir_acceleration,
    cp_potential,
    cp_to_gravity_ratio,
    gravitational_potential,
    min_separation_bound,
    plate_force,
    plate_gravity_acceleration,
    recapture_gap,
)
from src.physics.kinematics import magnetic_acceleration


@pytest.fixture
def diamond():
    return TestMassSpec.from_material(1e-15)


def test_radius_from_mass(diamond):
    assert math.isclose(diamond.radius, 4.086e-7, rel_tol=1e-3)
    assert math.isclose(diamond.polarizability, 4.7 / 7.7, rel_tol=1e-12)


def test_spec_validation():
    with pytest.raises(ValidationError):
        TestMassSpec(0.0, 3500.0, 5.7)
    with pytest.raises(ValidationError):
        TestMassSpec(1e-15, 3500.0, 0.5)
    with pytest.raises(ValidationError):
        TestMassSpec.from_material(1e-15, "copper")


def test_cp_vanishes_without_polarizability():
    spec = TestMassSpec(1e-15, 3500.0, 1.0)
    assert cp_potential(spec, 1e-5) == 0.0


def test_cp_overlap_rejected(diamond):
    with pytest.raises(GeometryError):
        cp_potential(diamond, 2 * diamond.radius)


def test_cp_falls_as_seventh_power(diamond):
    ratio = cp_potential(diamond, 1e-5) / cp_potential(diamond, 2e-5)
    assert math.isclose(ratio, 128.0, rel_tol=1e-12)


def test_min_separation_bound_value():
    bound = min_separation_bound(3500.0, 5.7)
    assert math.isclose(bound, 157e-6, rel_tol=0.02)


@pytest.mark.parametrize("mass", [1e-16, 1e-15, 1e-14])
def test_bound_is_tenth_of_gravity(mass):
    spec = TestMassSpec.from_material(mass)
    bound = min_separation_bound(spec.density, spec.dielectric_constant)
    assert math.isclose(
        cp_potential(spec, bound),
        0.1 * gravitational_potential(mass, bound),
        rel_tol=1e-9,
    )
    assert math.isclose(cp_to_gravity_ratio(spec, bound), 0.1, rel_tol=1e-9)


def test_bound_needs_dielectric():
    with pytest.raises(DomainError):
        min_separation_bound(3500.0, 1.0)


def test_plate_force_value(diamond):
    assert math.isclose(plate_force(diamond, 1.115e-5), 3.647e-21, rel_tol=1e-2)
    with pytest.raises(DomainError):
        plate_force(diamond, 0.0)


def test_acceleration_constant(diamond):
    x = 1e-5
    assert math.isclose(
        casimir_acceleration(diamond, x),
        acceleration_constant(diamond) / x**5,
        rel_tol=1e-12,
    )
    heavier = TestMassSpec.from_material(1e-14)
    assert math.isclose(
        acceleration_constant(heavier),
        acceleration_constant(diamond),
        rel_tol=1e-12,
    )


def test_recapture_gap_flagship(diamond):
    gap = recapture_gap(diamond, 1e4)
    assert math.isclose(gap, 8.05e-6, rel_tol=0.01)
    ratio = casimir_acceleration(diamond, gap) / magnetic_acceleration(
        diamond, 1e4
    )
    assert math.isclose(ratio, 0.1, rel_tol=1e-9)


def test_recapture_gap_scaling():
    rng = np.random.default_rng(7)
    for mass in 10 ** rng.uniform(-17, -13, 20):
        small = TestMassSpec.from_material(float(mass))
        large = TestMassSpec.from_material(32 * float(mass))
        assert math.isclose(
            recapture_gap(large, 1e4) / recapture_gap(small, 1e4),
            2.0,
            rel_tol=1e-12,
        )


def test_recapture_gap_needs_gradient(diamond):
    with pytest.raises(DomainError):
        recapture_gap(diamond, 0.0)


def test_plate_gravity():
    assert math.isclose(
        plate_gravity_acceleration(8960.0, 1e-6), 3.7575e-12, rel_tol=1e-3
    )
