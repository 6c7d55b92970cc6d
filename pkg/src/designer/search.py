"""Поиск минимальной массы и насыщающего N."""

import logging

import numpy as np
from scipy import optimize

from src.common.errors import (
    CollisionError,
    GeometryError,
    NoSolutionError,
    ValidationError,
)
from src.config import TIME_STEP
from src.physics.casimir import TestMassSpec, recapture_gap
from src.physics.kinematics import (
    DriveSpec,
    GeometrySpec,
    freefall_drift,
    full_profile,
)
from src.physics.phase import step2_phase

logger = logging.getLogger(__name__)

# Интервал поиска массы, кг
MASS_BRACKET = (1e-18, 1e-12)

# Точек на декаду в предварительном сканировании
SCAN_POINTS_PER_DECADE = 10

# Предел расширения интервала по N
MAX_N = 1e7


def _recapture_margin(
    spec: TestMassSpec, n: float, thickness: float, drive: DriveSpec
) -> float:
    """Конечный зазор минус x_min; при столкновении -x_min."""
    x_min = recapture_gap(spec, drive.field_gradient)
    try:
        geom = GeometrySpec(n, thickness)
        fall = freefall_drift(spec, geom, drive)
    except (CollisionError, GeometryError):
        return -x_min
    return geom.initial_gap(spec) - fall.s_max - x_min


def saturating_n(
    spec: TestMassSpec, drive: DriveSpec, plate_thickness: float
) -> float:
    """N, при котором в конце падения зазор ровно равен recapture_gap."""
    x_min = recapture_gap(spec, drive.field_gradient)
    lower = max((2 * x_min + plate_thickness) / spec.radius, 1 + 1e-9)

    def margin(n: float) -> float:
        return _recapture_margin(spec, n, plate_thickness, drive)

    if margin(lower) >= 0:
        return lower
    upper = 2 * lower
    while margin(upper) < 0:
        upper *= 2
        if upper > MAX_N:
            raise NoSolutionError("recapture cannot be met for any N")

    n = optimize.brentq(margin, lower, upper, xtol=upper * 1e-13, rtol=1e-12)
    logger.debug("saturating N=%.6g for m=%.4g kg", n, spec.mass)
    return float(n)


def mass_margin(
    mass: float,
    phase_target: float,
    drive: DriveSpec,
    n: float | None,
    material: str,
    plate_thickness: float,
) -> float:
    """Неотрицательна, если масса проходит recapture и набирает фазу."""
    spec = TestMassSpec.from_material(mass, material)
    try:
        if n is None:
            n = saturating_n(spec, drive, plate_thickness)
            recapture = 0.0
        else:
            margin = _recapture_margin(spec, n, plate_thickness, drive)
            recapture = margin / recapture_gap(spec, drive.field_gradient)
        profile = full_profile(spec, GeometrySpec(n, plate_thickness), drive)
    except (CollisionError, GeometryError, NoSolutionError):
        return -1.0
    phase = step2_phase(mass, profile) / phase_target - 1
    return min(recapture, phase)


def min_feasible_mass(
    phase_target: float,
    dB: float,
    tau: float,
    t_int: float,
    N: float | None = None,
    material: str = "diamond",
    plate_thickness: float = 1e-6,
    time_step: float = TIME_STEP,
) -> float:
    """
    Наименьшая масса, при которой выполнено условие перезахвата
    и фаза шага 2 достигает phase_target.

    Если N не задан, для каждой массы берётся N, насыщающее условие
    перезахвата в конце свободного падения.
    """
    if phase_target <= 0:
        raise ValidationError("phase target must be positive")
    drive = DriveSpec(dB, tau, t_int, time_step)

    def margin(mass: float) -> float:
        return mass_margin(
            mass, phase_target, drive, N, material, plate_thickness
        )

    lo, hi = MASS_BRACKET
    decades = round(np.log10(hi / lo))
    grid = np.logspace(
        np.log10(lo), np.log10(hi), decades * SCAN_POINTS_PER_DECADE + 1
    )
    margins = [margin(float(m)) for m in grid]
    passing = [i for i, value in enumerate(margins) if value >= 0]
    if not passing:
        raise NoSolutionError(
            f"no feasible mass in [{lo:g}, {hi:g}] kg"
        )
    first = passing[0]
    if first == 0:
        return float(grid[0])

    left, right = float(grid[first - 1]), float(grid[first])
    mass = optimize.brentq(margin, left, right, xtol=left * 1e-9, rtol=1e-9)
    # корень может лечь на сторону отказа
    if margin(mass) < 0:
        mass *= 1 + 1e-8
    logger.info(
        "minimum mass %.4g kg (target %.3g rad, N=%s)",
        mass,
        phase_target,
        "saturated" if N is None else f"{N:g}",
    )
    return float(mass)
