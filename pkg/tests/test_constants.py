import math

import pytest

from src.common.errors import UnknownMaterialError, ValidationError
from src.physics.constants import (
    CONSTANTS,
    ZETA9_FACTORIAL8,
    MaterialPreset,
    PhysicalConstants,
    preset,
)


def test_codata_values():
    assert math.isclose(CONSTANTS.hbar, 1.054571817e-34, rel_tol=1e-9)
    assert math.isclose(CONSTANTS.mu_B, 9.27401e-24, rel_tol=1e-6)
    assert CONSTANTS.g_factor == 2.0
    assert math.isclose(CONSTANTS.m_air, 4.8e-26)


def test_zeta_factor():
    # zeta(9) = 1.00200839...
    assert math.isclose(ZETA9_FACTORIAL8, 40320 * 1.0020083928, rel_tol=1e-9)


def test_constants_must_be_positive():
    with pytest.raises(ValidationError):
        PhysicalConstants(G=0.0)
    with pytest.raises(ValidationError):
        PhysicalConstants(m_air=-1.0)


def test_presets():
    assert preset("Diamond").density == 3500.0
    assert preset("diamond").dielectric_constant == 5.7
    assert preset("copper").youngs_modulus == 1.37e11
    with pytest.raises(UnknownMaterialError, match="unobtainium"):
        preset("unobtainium")


def test_preset_validation():
    with pytest.raises(ValidationError):
        MaterialPreset("glass", 2500.0, dielectric_constant=1.0)
    with pytest.raises(ValidationError):
        MaterialPreset("foam", 0.0)
