"""Траектории ветвей интерферометра на шагах 1-3."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from src.common.errors import CollisionError, GeometryError, ValidationError
from src.config import TIME_STEP
from src.physics.casimir import (
    TestMassSpec,
    acceleration_constant,
    casimir_acceleration,
)
from src.physics.constants import CONSTANTS

logger = logging.getLogger(__name__)

# Минимальное число шагов интегратора на этап ненулевой длины
MIN_STEPS_PER_STAGE = 100


@dataclass(frozen=True, slots=True)
class DriveSpec:
    """Параметры магнитного привода и длительности этапов."""

    field_gradient: float
    split_time: float
    flight_time: float
    time_step: float = TIME_STEP

    def __post_init__(self) -> None:
        if self.field_gradient < 0:
            raise ValidationError("field gradient must be >= 0")
        if self.split_time < 0 or self.flight_time < 0:
            raise ValidationError("stage durations must be >= 0")
        if self.time_step <= 0:
            raise ValidationError("time step must be positive")
        # нулевой этап допустим, ограничение только для ненулевых
        for name, duration in (
            ("split time", self.split_time),
            ("flight time", self.flight_time),
        ):
            if 0 < duration < MIN_STEPS_PER_STAGE * self.time_step:
                raise ValidationError(
                    f"time step must be <= {name}/{MIN_STEPS_PER_STAGE}"
                )


@dataclass(frozen=True, slots=True)
class GeometrySpec:
    """Расстояние между интерферометрами в радиусах и толщина пластины."""

    N: float
    plate_thickness: float

    def __post_init__(self) -> None:
        if self.N <= 1:
            raise ValidationError("N must be > 1")
        if self.plate_thickness <= 0:
            raise ValidationError("plate thickness must be positive")

    def inner_separation(self, spec: TestMassSpec) -> float:
        """A = N * R, начальное расстояние между внутренними ветвями."""
        return self.N * spec.radius

    def initial_gap(self, spec: TestMassSpec) -> float:
        """Зазор центр-поверхность в начале свободного падения."""
        gap = self.inner_separation(spec) / 2 - self.plate_thickness / 2
        if gap <= 0:
            raise GeometryError(
                f"plate of thickness {self.plate_thickness:.3g} m does not "
                f"fit between inner branches (N*R={gap:.3g} m)"
            )
        return gap

    def center_distance(self, spec: TestMassSpec, drive: DriveSpec) -> float:
        """d = dx + N * R."""
        return split_size(spec, drive) + self.inner_separation(spec)


@dataclass(frozen=True, slots=True)
class FreeFall:
    """Дрейф внутренней ветви к пластине на шаге 2."""

    times: np.ndarray
    drift: np.ndarray
    velocity: np.ndarray
    s_max: float


@dataclass(frozen=True, slots=True, eq=False)
class TrajectoryProfile:
    """
    Временной ряд разделения ветвей и зазора до пластины.

    Каждый этап хранится отдельным отрезком со своими концами, поэтому
    время на границах этапов повторяется. markers - начала отрезков
    шагов 1, 2, 3 и конец массива.
    """

    times: np.ndarray
    branch_separation: np.ndarray
    drift_s: np.ndarray
    drift_velocity: np.ndarray
    gap: np.ndarray
    markers: tuple[int, int, int, int]
    s_max: float
    tau1: float
    a_mag: float
    split_size: float
    initial_gap: float
    inner_separation: float
    pull_constant: float
    time_step: float

    def step(self, number: int) -> slice:
        """Срез массивов для шага 1, 2 или 3."""
        if number not in (1, 2, 3):
            raise ValidationError(f"no step {number}")
        return slice(self.markers[number - 1], self.markers[number])

    @property
    def duration(self) -> float:
        return float(self.times[-1] - self.times[0])

    @property
    def end_gap(self) -> float:
        """Минимальный зазор, в конце свободного падения."""
        return self.initial_gap - self.s_max

    def rows(self) -> list[tuple[float, float, float, float]]:
        """Строки t, separation, s, gap для CSV."""
        return list(
            zip(
                self.times.tolist(),
                self.branch_separation.tolist(),
                self.drift_s.tolist(),
                self.gap.tolist(),
                strict=True,
            )
        )


def magnetic_acceleration(spec: TestMassSpec, dB: float) -> float:
    """a_mag = g mu_B dB / m."""
    return CONSTANTS.g_factor * CONSTANTS.mu_B * dB / spec.mass


def split_size(spec: TestMassSpec, drive: DriveSpec) -> float:
    """Размер суперпозиции после шага 1: 2 a_mag (tau/2)^2."""
    a_mag = magnetic_acceleration(spec, drive.field_gradient)
    return 2.0 * a_mag * (drive.split_time / 2) ** 2


def _stage_grid(duration: float, time_step: float) -> tuple[np.ndarray, float]:
    """Равномерная сетка этапа с шагом не больше time_step."""
    if duration == 0:
        return np.zeros(1), 0.0
    steps = math.ceil(duration / time_step - 1e-9)
    return np.linspace(0.0, duration, steps + 1), duration / steps


@njit(cache=True)
def _plate_pull(k: float, gap: float) -> float:
    if gap <= 0.0:
        return np.inf
    return k / gap**5


@njit(cache=True)
def _integrate_drift(
    k: float, x0: float, dt: float, n_steps: int
) -> tuple[np.ndarray, np.ndarray, int]:
    s = np.zeros(n_steps + 1)
    v = np.zeros(n_steps + 1)
    for i in range(n_steps):
        si = s[i]
        vi = v[i]
        a1 = _plate_pull(k, x0 - si)
        a2 = _plate_pull(k, x0 - (si + 0.5 * dt * vi))
        a3 = _plate_pull(k, x0 - (si + 0.5 * dt * (vi + 0.5 * dt * a1)))
        a4 = _plate_pull(k, x0 - (si + dt * (vi + 0.5 * dt * a2)))
        s[i + 1] = si + dt * (
            vi + dt * (a1 + a2 + a3) / 6.0
        )
        v[i + 1] = vi + dt * (a1 + 2.0 * a2 + 2.0 * a3 + a4) / 6.0
        if not x0 - s[i + 1] > 0.0:
            return s, v, i + 1
    return s, v, -1


def freefall_drift(
    spec: TestMassSpec, geom: GeometrySpec, drive: DriveSpec
) -> FreeFall:
    """
    Интегрирует s'' = F_ca(x0 - s) / m на шаге 2 методом RK4.

    Бросает CollisionError, если ветвь доходит до пластины.
    """
    x0 = geom.initial_gap(spec)
    times, dt = _stage_grid(drive.flight_time, drive.time_step)
    n_steps = len(times) - 1
    drift, velocity, hit = _integrate_drift(
        acceleration_constant(spec), x0, dt, n_steps
    )
    if hit >= 0:
        raise CollisionError(float(times[hit]), float(x0 - drift[hit]))

    logger.debug(
        "free fall: %d steps of %.3g s, s_max=%.6g m", n_steps, dt, drift[-1]
    )
    return FreeFall(
        times=times,
        drift=drift,
        velocity=velocity,
        s_max=float(drift[-1]),
    )


def recombine_time(drive: DriveSpec, a_mag: float, s_max: float) -> float:
    """tau1 = 2 sqrt((tau/2)^2 + s_max / a_mag)."""
    if s_max == 0:
        return drive.split_time
    if a_mag <= 0:
        raise ValidationError("recombination needs a positive a_mag")
    return 2.0 * math.sqrt((drive.split_time / 2) ** 2 + s_max / a_mag)


def _split_profile(a_mag: float, tau: float, times: np.ndarray) -> np.ndarray:
    """Разделение ветвей при разгоне и торможении за время tau."""
    half = tau / 2
    accelerate = a_mag * times**2
    decelerate = 2.0 * a_mag * half**2 - a_mag * (tau - times) ** 2
    return np.where(times <= half, accelerate, decelerate)


def full_profile(
    spec: TestMassSpec, geom: GeometrySpec, drive: DriveSpec
) -> TrajectoryProfile:
    """Склеивает расщепление, свободное падение и рекомбинацию."""
    a_mag = magnetic_acceleration(spec, drive.field_gradient)
    dx = split_size(spec, drive)
    x0 = geom.initial_gap(spec)
    tau = drive.split_time

    times1, _ = _stage_grid(tau, drive.time_step)
    sep1 = _split_profile(a_mag, tau, times1)

    if a_mag > 0:
        fall = freefall_drift(spec, geom, drive)
    else:
        # без суперпозиции дрейфовать нечему
        times2, _ = _stage_grid(drive.flight_time, drive.time_step)
        zeros = np.zeros_like(times2)
        fall = FreeFall(times2, zeros, zeros.copy(), 0.0)

    tau1 = recombine_time(drive, a_mag, fall.s_max)
    times3, _ = _stage_grid(tau1, drive.time_step)
    # рекомбинация - шаг 1 с tau1, пройденный в обратную сторону
    sep3 = _split_profile(a_mag, tau1, tau1 - times3)

    n1, n2, n3 = len(times1), len(fall.times), len(times3)
    zeros1, zeros3 = np.zeros(n1), np.zeros(n3)
    drift = np.concatenate([zeros1, fall.drift, zeros3])

    return TrajectoryProfile(
        times=np.concatenate(
            [times1, tau + fall.times, tau + drive.flight_time + times3]
        ),
        branch_separation=np.concatenate([sep1, dx + fall.drift, sep3]),
        drift_s=drift,
        drift_velocity=np.concatenate([zeros1, fall.velocity, zeros3]),
        gap=x0 - drift,
        markers=(0, n1, n1 + n2, n1 + n2 + n3),
        s_max=fall.s_max,
        tau1=tau1,
        a_mag=a_mag,
        split_size=dx,
        initial_gap=x0,
        inner_separation=geom.inner_separation(spec),
        pull_constant=acceleration_constant(spec),
        time_step=drive.time_step,
    )


def drift_energy_residual(profile: TrajectoryProfile) -> float:
    """
    Относительное расхождение 1/2 v^2 и работы силы Казимира на шаге 2.

    Работа на единицу массы: k/4 (1/x_end^4 - 1/x0^4).
    """
    step2 = profile.step(2)
    velocity = profile.drift_velocity[step2][-1]
    x0 = profile.initial_gap
    x_end = x0 - profile.drift_s[step2][-1]
    work = profile.pull_constant / 4.0 * (x_end**-4 - x0**-4)
    if work == 0:
        return 0.0
    return abs(0.5 * velocity**2 - work) / work


def outer_branch_drift(
    spec: TestMassSpec, geom: GeometrySpec, drive: DriveSpec
) -> float:
    """
    Оценка смещения внешней ветви к пластине за шаг 2.

    Только диагностика: в профиле внешние ветви неподвижны.
    """
    gap = geom.initial_gap(spec) + split_size(spec, drive)
    return 0.5 * casimir_acceleration(spec, gap) * drive.flight_time**2
