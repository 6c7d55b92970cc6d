import math

import numpy as np
import pytest

from src.common.errors import GeometryError, ValidationError
from src.physics.casimir import TestMassSpec
from src.physics.plate import (
    PlateSpec,
    assess_plate,
    deflection,
    ground_state_spread,
    max_imbalance_force,
    max_length,
    plate_mass,
    vibration_frequency,
)


@pytest.fixture
def copper():
    return PlateSpec.from_material(1e-3, 1e-6)


def test_aspect_ratio_boundary_is_rejected():
    with pytest.raises(ValidationError):
        PlateSpec.from_material(1e-5, 1e-6)
    with pytest.raises(ValidationError):
        PlateSpec.from_material(3e-6, 3e-7)
    assert PlateSpec.from_material(1.001e-5, 1e-6).length == 1.001e-5


def test_plate_validation():
    with pytest.raises(ValidationError):
        PlateSpec.from_material(1e-5, 1e-6)
    with pytest.raises(ValidationError):
        PlateSpec.from_material(1e-3, 1e-6, "diamond")
    with pytest.raises(ValidationError):
        PlateSpec(1e-3, 1e-6, 0.0, 1e11)


def test_copper_plate_numbers(copper):
    assert plate_mass(copper) == pytest.approx(8.96e-9, rel=1e-12)
    assert vibration_frequency(copper) == pytest.approx(1.564e4, rel=1e-3)
    assert ground_state_spread(copper) == pytest.approx(8.67e-16, rel=2e-3)


def test_spread_does_not_depend_on_length(copper):
    longer = PlateSpec.from_material(5e-3, 1e-6)
    assert ground_state_spread(longer) == pytest.approx(
        ground_state_spread(copper), rel=1e-12
    )
    closed = math.sqrt(1.054571817e-34 / math.sqrt(16 * 1.37e11 * 8960))
    closed /= 1e-6
    assert ground_state_spread(copper) == pytest.approx(closed, rel=1e-6)


def test_deflection_scaling(copper):
    assert deflection(0.0, copper) == 0.0
    base = deflection(1e-21, copper)
    assert deflection(2e-21, copper) == pytest.approx(2 * base, rel=1e-12)
    longer = PlateSpec.from_material(2e-3, 1e-6)
    assert deflection(1e-21, longer) == pytest.approx(4 * base, rel=1e-12)
    with pytest.raises(ValidationError):
        deflection(-1.0, copper)


def test_max_length_self_consistent(copper):
    rng = np.random.default_rng(31)
    for force in 10 ** rng.uniform(-24, -18, 20):
        length = max_length(float(force), copper)
        edge = PlateSpec.from_material(length, copper.thickness)
        assert deflection(float(force), edge) == pytest.approx(
            ground_state_spread(edge), rel=1e-9
        )
    assert max_length(0.0, copper) == math.inf


def test_flagship_imbalance(flagship, flagship_profile):
    force = max_imbalance_force(flagship.mass_spec, flagship_profile, 0.5)
    assert force == pytest.approx(2.39e-21, rel=0.1)
    assert deflection(force, flagship.plate) <= 5e-21

    assessment = assess_plate(flagship.plate, force)
    assert assessment.which_path_ok
    assert 0.01 <= assessment.length_bound <= 1.0
    assert assessment.as_record()["which_path_ok"] is True


def test_imbalance_grows_with_offset(flagship, flagship_profile):
    spec = flagship.mass_spec
    assert max_imbalance_force(spec, flagship_profile, 0.0) == 0.0
    forces = [
        max_imbalance_force(spec, flagship_profile, u)
        for u in np.linspace(0.0, 0.5, 11)
    ]
    assert forces == sorted(forces)
    with pytest.raises(ValidationError):
        max_imbalance_force(spec, flagship_profile, 0.6)


def test_imbalance_rejects_contact(flagship, flagship_profile):
    huge = TestMassSpec(1e-9, 3500.0, 5.7)
    with pytest.raises(GeometryError):
        max_imbalance_force(huge, flagship_profile, 0.5)
