"""Скорости рассеяния и накопленный показатель декогеренции."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np
from scipy import integrate, optimize

from src.common.errors import NoSolutionError, ValidationError
from src.physics.casimir import TestMassSpec
from src.physics.constants import CONSTANTS, ZETA9_FACTORIAL8
from src.physics.kinematics import (
    DriveSpec,
    TrajectoryProfile,
    full_profile,
)

if TYPE_CHECKING:
    from src.designer.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

# Допустимое расхождение замкнутой формы и прямой суммы по профилю
SUMMATION_TOLERANCE = 1e-3

# Верхняя граница поиска плотности газа, м^-3
MAX_NUMBER_DENSITY = 1e30


@dataclass(frozen=True, slots=True)
class EnvironmentSpec:
    """Остаточный газ и температуры (внешняя и внутренняя)."""

    number_density: float
    external_temperature: float
    internal_temperature: float

    def __post_init__(self) -> None:
        if self.number_density < 0:
            raise ValidationError("number density must be >= 0")
        if self.external_temperature < 0 or self.internal_temperature < 0:
            raise ValidationError("temperatures must be >= 0")

    def with_density(self, number_density: float) -> EnvironmentSpec:
        return EnvironmentSpec(
            number_density,
            self.external_temperature,
            self.internal_temperature,
        )


@dataclass(frozen=True, slots=True)
class DecoherenceBudget:
    gamma_air: float
    lambda_air: float
    lambda_sc: float
    lambda_e: float
    lambda_a: float
    exponent: float
    dominant_channel: str
    contributions: dict[str, float] = field(default_factory=dict)
    long_wavelength_ok: bool = True

    def as_record(self) -> dict[str, float | str | bool]:
        record: dict[str, float | str | bool] = {
            "gamma_air_per_s": self.gamma_air,
            "lambda_air": self.lambda_air,
            "lambda_sc": self.lambda_sc,
            "lambda_e": self.lambda_e,
            "lambda_a": self.lambda_a,
            "exponent": self.exponent,
            "dominant_channel": self.dominant_channel,
            "long_wavelength_ok": self.long_wavelength_ok,
        }
        for name, value in self.contributions.items():
            record[f"contribution_{name}"] = value
        return record


def lambda_air(env: EnvironmentSpec, spec: TestMassSpec) -> float:
    """Константа рассеяния молекул воздуха в длинноволновом пределе."""
    thermal = (2 * CONSTANTS.k_b * env.external_temperature) ** 1.5
    return (
        4 * spec.radius**2 / (3 * CONSTANTS.hbar**2)
        * env.number_density
        * math.sqrt(math.pi * CONSTANTS.m_air)
        * thermal
    )


def gamma_air(env: EnvironmentSpec, spec: TestMassSpec) -> float:
    """Скорость декогеренции от воздуха в насыщенном пределе."""
    velocity = math.sqrt(
        2 * math.pi * CONSTANTS.k_b * env.external_temperature
        / CONSTANTS.m_air
    )
    return 16 * math.pi * env.number_density * spec.radius**2 / 3 * velocity


def air_thermal_wavelength(env: EnvironmentSpec) -> float:
    """Тепловая длина волны де Бройля молекулы воздуха."""
    if env.external_temperature == 0:
        return math.inf
    return CONSTANTS.hbar * math.sqrt(
        2 * math.pi
        / (CONSTANTS.m_air * CONSTANTS.k_b * env.external_temperature)
    )


def blackbody_wavelength(env: EnvironmentSpec) -> float:
    """hbar c / (k_B T_ex)."""
    if env.external_temperature == 0:
        return math.inf
    return CONSTANTS.hbar * CONSTANTS.c / (
        CONSTANTS.k_b * env.external_temperature
    )


def long_wavelength_valid(env: EnvironmentSpec, size: float) -> bool:
    """Фотоны в длинноволновом пределе: длина волны > 10 размеров."""
    return blackbody_wavelength(env) > 10 * size


def photon_constants(
    env: EnvironmentSpec, spec: TestMassSpec
) -> tuple[float, float, float]:
    """Константы рассеяния, излучения и поглощения фотонов."""
    hc = CONSTANTS.hbar * CONSTANTS.c
    radius = spec.radius
    ext = CONSTANTS.k_b * env.external_temperature / hc
    internal = CONSTANTS.k_b * env.internal_temperature / hc

    scattering = (
        ZETA9_FACTORIAL8
        * 8 * CONSTANTS.c * radius**6 / (9 * math.pi)
        * ext**9
        * spec.polarizability**2
    )
    prefactor = 16 * math.pi**5 * CONSTANTS.c * radius**3 / 189
    emission = prefactor * internal**6 * spec.polarizability_imag
    absorption = prefactor * ext**6 * spec.polarizability_imag
    return scattering, emission, absorption


def separation_integral(
    profile: TrajectoryProfile, drive: DriveSpec
) -> float:
    """
    Интеграл квадрата разделения ветвей по всем трём шагам.

    Замкнутая форма для шагов 1 и 3 и сумма по дрейфу для шага 2.
    """
    a_mag = profile.a_mag
    half = drive.split_time / 2
    half1 = profile.tau1 / 2
    static = (
        46 / 15 * a_mag**2 * (half**5 + half1**5)
        + 4 * a_mag**2 * half**4 * drive.flight_time
    )

    step = profile.step(2)
    times = profile.times[step]
    if len(times) < 2:
        return static
    s = profile.drift_s[step]
    drift = 4 * a_mag * half**2 * s + s**2
    return static + float(integrate.trapezoid(drift, times))


def direct_separation_integral(profile: TrajectoryProfile) -> float:
    """Сумма sep^2 dt по каждому шагу профиля."""
    total = 0.0
    for number in (1, 2, 3):
        step = profile.step(number)
        times = profile.times[step]
        if len(times) < 2:
            continue
        sep = profile.branch_separation[step]
        total += float(integrate.trapezoid(sep**2, times))
    return total


def _check_profile(profile: TrajectoryProfile, drive: DriveSpec) -> None:
    expected = drive.split_time + drive.flight_time + profile.tau1
    if not math.isclose(profile.duration, expected, rel_tol=1e-9):
        raise ValidationError(
            f"profile lasts {profile.duration:.9g} s, drive implies "
            f"{expected:.9g} s"
        )
    dx = 2 * profile.a_mag * (drive.split_time / 2) ** 2
    if not math.isclose(profile.split_size, dx, rel_tol=1e-9, abs_tol=0.0):
        raise ValidationError("profile split size does not match the drive")


def _photon_bracket(
    env: EnvironmentSpec,
    spec: TestMassSpec,
    profile: TrajectoryProfile,
    drive: DriveSpec,
) -> tuple[dict[str, float], float]:
    """Вклады фотонных каналов и их сумма по интегралу разделения."""
    bracket = separation_integral(profile, drive)
    direct = direct_separation_integral(profile)
    if bracket > 0 and abs(direct - bracket) > SUMMATION_TOLERANCE * bracket:
        raise ValidationError(
            f"separation integral {bracket:.6g} disagrees with profile sum "
            f"{direct:.6g}"
        )
    scattering, emission, absorption = photon_constants(env, spec)
    contributions = {
        "scattering": scattering * bracket,
        "emission": emission * bracket,
        "absorption": absorption * bracket,
    }
    return contributions, sum(contributions.values())


def accumulated_exponent(
    env: EnvironmentSpec,
    spec: TestMassSpec,
    profile: TrajectoryProfile,
    drive: DriveSpec,
) -> float:
    """Суммарный показатель затухания за всё время эксперимента."""
    _check_profile(profile, drive)
    _, photons = _photon_bracket(env, spec, profile, drive)
    return gamma_air(env, spec) * profile.duration + photons


def decoherence_budget(
    env: EnvironmentSpec,
    spec: TestMassSpec,
    profile: TrajectoryProfile,
    drive: DriveSpec,
) -> DecoherenceBudget:
    """Собирает все константы и вклады каналов."""
    _check_profile(profile, drive)
    contributions, photons = _photon_bracket(env, spec, profile, drive)
    gamma = gamma_air(env, spec)
    contributions = {"air": gamma * profile.duration, **contributions}
    scattering, emission, absorption = photon_constants(env, spec)
    size = float(np.max(profile.branch_separation, initial=0.0))

    return DecoherenceBudget(
        gamma_air=gamma,
        lambda_air=lambda_air(env, spec),
        lambda_sc=scattering,
        lambda_e=emission,
        lambda_a=absorption,
        exponent=contributions["air"] + photons,
        dominant_channel=max(contributions, key=contributions.__getitem__),
        contributions=contributions,
        long_wavelength_ok=long_wavelength_valid(env, size),
    )


def pressure(env: EnvironmentSpec) -> float:
    """Давление идеального газа n k_B T."""
    return env.number_density * CONSTANTS.k_b * env.external_temperature


def threshold_density(
    config: ExperimentConfig,
    budget_limit: float,
    profile: TrajectoryProfile | None = None,
) -> float:
    """Плотность газа, при которой показатель равен budget_limit."""
    if budget_limit <= 0:
        raise ValidationError("budget limit must be positive")
    spec = config.mass_spec
    drive = config.drive
    if profile is None:
        profile = full_profile(spec, config.geometry, drive)

    def excess(density: float) -> float:
        env = config.environment.with_density(density)
        return accumulated_exponent(env, spec, profile, drive) - budget_limit

    if excess(0.0) >= 0:
        raise NoSolutionError(
            "photon channels alone exceed the decoherence budget"
        )

    upper = 1.0
    while excess(upper) < 0:
        upper *= 10
        if upper > MAX_NUMBER_DENSITY:
            raise NoSolutionError("no crossing below 1e30 m^-3")

    density = optimize.brentq(
        excess, 0.0, upper, xtol=upper * 1e-15, rtol=1e-13
    )
    logger.debug("threshold density %.6g m^-3", density)
    return float(density)
