"""Механика экранирующей пластины."""

import math
from dataclasses import dataclass

from src.common.errors import GeometryError, ValidationError
from src.physics.casimir import TestMassSpec, plate_force
from src.physics.constants import CONSTANTS, preset
from src.physics.kinematics import TrajectoryProfile

# Пластина считается тонкой при L/W > 10
MIN_ASPECT_RATIO = 10.0

# Допустимый диапазон смещения масс в радиусах
MAX_PLACEMENT_UNCERTAINTY = 0.5


@dataclass(frozen=True, slots=True)
class PlateSpec:
    length: float
    thickness: float
    density: float
    youngs_modulus: float

    def __post_init__(self) -> None:
        for name in ("length", "thickness", "density", "youngs_modulus"):
            if getattr(self, name) <= 0:
                raise ValidationError(f"plate {name} must be positive")
        ratio = self.length / self.thickness
        if ratio < MIN_ASPECT_RATIO or math.isclose(ratio, MIN_ASPECT_RATIO):
            raise ValidationError(
                f"plate length must exceed {MIN_ASPECT_RATIO:g} thicknesses"
            )

    @classmethod
    def from_material(
        cls, length: float, thickness: float, material: str = "copper"
    ) -> "PlateSpec":
        mat = preset(material)
        if mat.youngs_modulus is None:
            raise ValidationError(f"{mat.name} has no Young's modulus")
        return cls(length, thickness, mat.density, mat.youngs_modulus)


@dataclass(frozen=True, slots=True)
class PlateAssessment:
    deflection_max: float
    frequency: float
    ground_spread: float
    which_path_ok: bool
    length_bound: float

    def as_record(self) -> dict[str, float | bool]:
        return {
            "deflection_max_m": self.deflection_max,
            "frequency_rad_per_s": self.frequency,
            "ground_spread_m": self.ground_spread,
            "which_path_ok": self.which_path_ok,
            "length_bound_m": self.length_bound,
        }


def plate_mass(spec: PlateSpec) -> float:
    return spec.density * spec.length**2 * spec.thickness


def deflection(force: float, spec: PlateSpec) -> float:
    """Прогиб защемлённой пластины под точечной силой в центре."""
    if force < 0:
        raise ValidationError("force must be >= 0")
    return force * spec.length**2 / (
        16 * spec.youngs_modulus * spec.thickness**3
    )


def vibration_frequency(spec: PlateSpec) -> float:
    """Частота основной моды, рад/с."""
    return math.sqrt(
        16 * spec.youngs_modulus * spec.thickness**2
        / (spec.density * spec.length**4)
    )


def ground_state_spread(spec: PlateSpec) -> float:
    """sqrt(hbar / (m_plate omega))."""
    return math.sqrt(
        CONSTANTS.hbar / (plate_mass(spec) * vibration_frequency(spec))
    )


def max_imbalance_force(
    spec: TestMassSpec, profile: TrajectoryProfile, u: float
) -> float:
    """
    Нескомпенсированная сила Казимира при смещении обеих масс на uR.

    Берётся минимальный зазор профиля, то есть конец свободного падения.
    """
    if not 0 <= u <= MAX_PLACEMENT_UNCERTAINTY:
        raise ValidationError("u must lie in [0, 0.5]")
    gap = float(profile.gap.min())
    offset = u * spec.radius
    if gap - offset <= 0:
        raise GeometryError(
            f"displaced sphere touches the plate (gap {gap:.3g} m)"
        )
    if offset == 0:
        return 0.0
    return plate_force(spec, gap - offset) - plate_force(spec, gap + offset)


def max_length(force_max: float, plate: PlateSpec) -> float:
    """
    Наибольшая длина пластины, при которой прогиб меньше разброса.

    Длина из plate не используется: разброс основного состояния
    от длины не зависит.
    """
    if force_max < 0:
        raise ValidationError("force must be >= 0")
    if force_max == 0:
        return math.inf
    width = plate.thickness
    value = (
        width**2
        * (16 * plate.youngs_modulus) ** 0.75
        * math.sqrt(CONSTANTS.hbar)
        / (force_max * plate.density**0.25)
    )
    return math.sqrt(value)


def assess_plate(plate: PlateSpec, force_max: float) -> PlateAssessment:
    """Прогиб, частота, разброс и проверка which-path."""
    deflection_max = deflection(force_max, plate)
    spread = ground_state_spread(plate)
    return PlateAssessment(
        deflection_max=deflection_max,
        frequency=vibration_frequency(plate),
        ground_spread=spread,
        which_path_ok=deflection_max < spread,
        length_bound=max_length(force_max, plate),
    )
