"""Силы вакуумных флуктуаций: сфера-сфера, сфера-пластина и гравитация пластины.

Зазор x везде отсчитывается от центра сферы до ближайшей поверхности
пластины. Силы возвращаются по модулю; направление всегда к пластине
(притяжение), потенциалы неположительны.
"""

import math
from dataclasses import dataclass

from src.common.errors import DomainError, GeometryError, ValidationError
from src.config import IM_POLARIZABILITY
from src.physics.constants import CONSTANTS, preset


def polarizability_factor(epsilon: float) -> float:
    """Действительная часть (eps-1)/(eps+2)."""
    return (epsilon - 1.0) / (epsilon + 2.0)


@dataclass(frozen=True, slots=True)
class TestMassSpec:
    """Сферическая пробная масса из однородного диэлектрика."""

    __test__ = False

    mass: float
    density: float
    dielectric_constant: float
    # Im((eps-1)/(eps+2)), нужен только каналам поглощения/излучения
    polarizability_imag: float = IM_POLARIZABILITY

    def __post_init__(self) -> None:
        if self.mass <= 0:
            raise ValidationError("mass must be positive")
        if self.density <= 0:
            raise ValidationError("density must be positive")
        if self.dielectric_constant < 1:
            raise ValidationError("dielectric constant must be >= 1")
        if self.polarizability_imag < 0:
            raise ValidationError("imaginary polarizability must be >= 0")

    @classmethod
    def from_material(
        cls,
        mass: float,
        material: str = "diamond",
        polarizability_imag: float = IM_POLARIZABILITY,
    ) -> "TestMassSpec":
        """Создаёт пробную массу из пресета материала."""
        mat = preset(material)
        if mat.dielectric_constant is None:
            raise ValidationError(f"{mat.name} is not a dielectric")
        return cls(
            mass=mass,
            density=mat.density,
            dielectric_constant=mat.dielectric_constant,
            polarizability_imag=polarizability_imag,
        )

    @property
    def radius(self) -> float:
        """Радиус из массы и плотности."""
        return (3.0 * self.mass / (4.0 * math.pi * self.density)) ** (1 / 3)

    @property
    def polarizability(self) -> float:
        return polarizability_factor(self.dielectric_constant)


def cp_potential(spec: TestMassSpec, r: float) -> float:
    """Потенциал Казимира-Польдера между двумя одинаковыми сферами."""
    radius = spec.radius
    if r <= 2 * radius:
        raise GeometryError(
            f"spheres overlap: r={r:.3g} m <= 2R={2 * radius:.3g} m"
        )
    hc = CONSTANTS.hbar * CONSTANTS.c
    return (
        -(23.0 * hc / (4.0 * math.pi))
        * radius**6
        / r**7
        * spec.polarizability**2
    )


def gravitational_potential(mass: float, r: float) -> float:
    """Ньютоновский потенциал двух одинаковых масс."""
    return -CONSTANTS.G * mass**2 / r


def cp_to_gravity_ratio(spec: TestMassSpec, r: float) -> float:
    """Отношение |V_CP| / |V_grav| на расстоянии r."""
    return cp_potential(spec, r) / gravitational_potential(spec.mass, r)


def min_separation_bound(density: float, epsilon: float) -> float:
    """Минимальное расстояние, где V_CP в 10 раз слабее гравитации."""
    if density <= 0:
        raise DomainError("density must be positive")
    if epsilon <= 1:
        raise DomainError("bound is undefined for epsilon <= 1")
    hc = CONSTANTS.hbar * CONSTANTS.c
    volume_factor = 3.0 / (4.0 * math.pi * density)
    inner = (
        10.0
        * (23.0 * hc / (4.0 * math.pi * CONSTANTS.G))
        * (volume_factor * polarizability_factor(epsilon)) ** 2
    )
    return inner ** (1 / 6)


def plate_force(spec: TestMassSpec, x: float) -> float:
    """Модуль силы Казимира между сферой и идеально проводящей пластиной."""
    if x <= 0:
        raise DomainError(f"gap must be positive, got {x:.3g} m")
    hc = CONSTANTS.hbar * CONSTANTS.c
    return (
        (3.0 * hc / (2.0 * math.pi)) * spec.polarizability
        * spec.radius**3 / x**5
    )


def casimir_acceleration(spec: TestMassSpec, x: float) -> float:
    """Ускорение сферы к пластине."""
    return plate_force(spec, x) / spec.mass


def acceleration_constant(spec: TestMassSpec) -> float:
    """Константа k в a_ca = k / x^5; от массы не зависит."""
    hc = CONSTANTS.hbar * CONSTANTS.c
    return (
        (3.0 * hc / (2.0 * math.pi)) * spec.polarizability
        * 3.0 / (4.0 * math.pi * spec.density)
    )


def recapture_gap(spec: TestMassSpec, dB: float) -> float:
    """Минимальный зазор, при котором a_ca / a_mag <= 0.1."""
    if dB <= 0:
        raise DomainError("field gradient must be positive")
    hc = CONSTANTS.hbar * CONSTANTS.c
    magnetic_force = CONSTANTS.g_factor * CONSTANTS.mu_B * dB
    value = (
        90.0 * hc / (8.0 * spec.density * math.pi**2)
        * spec.polarizability
        * spec.mass / magnetic_force
    )
    return value ** (1 / 5)


def plate_gravity_acceleration(
    plate_density: float, thickness: float
) -> float:
    """Притяжение бесконечного слоя: a_g = 2 pi G rho_p W."""
    return 2.0 * math.pi * CONSTANTS.G * plate_density * thickness
