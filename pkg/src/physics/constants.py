"""Физические константы и пресеты материалов (СИ)."""

import math
from dataclasses import dataclass

from scipy import constants as codata
from scipy.special import zeta

from src.common.errors import UnknownMaterialError, ValidationError
from src.config import AIR_MOLECULE_MASS


@dataclass(frozen=True, slots=True)
class PhysicalConstants:
    """Набор констант, общий для всех модулей."""

    hbar: float = codata.hbar
    c: float = codata.c
    G: float = codata.G
    k_b: float = codata.k
    mu_B: float = codata.physical_constants["Bohr magneton"][0]
    # g-фактор электрона, точно 2
    g_factor: float = 2.0
    m_air: float = AIR_MOLECULE_MASS

    def __post_init__(self) -> None:
        for name in self.__dataclass_fields__:
            if not getattr(self, name) > 0:
                raise ValidationError(f"constant {name} must be positive")


CONSTANTS = PhysicalConstants()

# 8! * zeta(9) для рассеяния чернотельных фотонов
ZETA9_FACTORIAL8 = math.factorial(8) * float(zeta(9))


@dataclass(frozen=True, slots=True)
class MaterialPreset:
    """Материал пробной массы (диэлектрик) или пластины (проводник)."""

    name: str
    density: float
    dielectric_constant: float | None = None
    youngs_modulus: float | None = None

    def __post_init__(self) -> None:
        if self.density <= 0:
            raise ValidationError(f"{self.name}: density must be positive")
        if self.dielectric_constant is not None and (
            self.dielectric_constant <= 1
        ):
            raise ValidationError(
                f"{self.name}: dielectric constant must exceed 1"
            )
        if self.youngs_modulus is not None and self.youngs_modulus <= 0:
            raise ValidationError(
                f"{self.name}: Young's modulus must be positive"
            )


MATERIALS = {
    # eps = 5.7 воспроизводит границу 157 мкм для сфер Казимира-Польдера
    "diamond": MaterialPreset("diamond", 3500.0, dielectric_constant=5.7),
    "copper": MaterialPreset("copper", 8960.0, youngs_modulus=1.37e11),
}


def preset(name: str) -> MaterialPreset:
    """Возвращает пресет материала по имени."""
    try:
        return MATERIALS[name.lower()]
    except KeyError:
        known = ", ".join(sorted(MATERIALS))
        raise UnknownMaterialError(
            f"unknown material '{name}' (known: {known})"
        ) from None
