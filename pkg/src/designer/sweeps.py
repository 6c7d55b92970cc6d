"""Свипы по сеткам параметров для таблиц графиков."""

import asyncio
import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import partial

from src.common.errors import CollisionError, GeometryError, ValidationError
from src.config import WORKERS
from src.designer.experiment import ExperimentConfig
from src.physics.casimir import recapture_gap
from src.physics.decoherence import (
    EnvironmentSpec,
    accumulated_exponent,
    pressure,
)
from src.physics.kinematics import TrajectoryProfile, full_profile
from src.physics.phase import step2_phase, total_phase
from src.physics.plate import deflection, max_imbalance_force

logger = logging.getLogger(__name__)

Row = tuple[float, ...]


@dataclass(frozen=True, slots=True)
class SweepRow:
    params: Row
    values: dict[str, float] = field(default_factory=dict)
    ok: bool = True


@dataclass(frozen=True, slots=True)
class SweepResult:
    """
    Строки отсортированы по осям, повторов нет.

    columns задаёт столбцы CSV по порядку: имя оси, имя значения
    или flag.
    """

    axes: tuple[str, ...]
    columns: tuple[str, ...]
    rows: list[SweepRow]
    flag: str = "ok"

    def header(self) -> list[str]:
        return list(self.columns)

    def cell(self, row: SweepRow, name: str) -> float | bool:
        if name == self.flag:
            return row.ok
        if name in self.axes:
            return row.params[self.axes.index(name)]
        return row.values[name]

    def table(self) -> list[list[float | bool]]:
        return [
            [self.cell(row, name) for name in self.columns]
            for row in self.rows
        ]


def _grid(*axes: Iterable[float]) -> list[Row]:
    """Декартово произведение осей, упорядоченное и без повторов."""
    points: list[Row] = [()]
    for axis in axes:
        values = [float(v) for v in axis]
        if len(set(values)) != len(values):
            raise ValidationError("grid axis contains duplicates")
        points = [(*p, v) for p in points for v in sorted(values)]
    return points


async def _evaluate(
    func: Callable[[Row], SweepRow], points: Sequence[Row]
) -> list[SweepRow]:
    """Считает точки сетки; порядок результата совпадает с порядком точек."""
    if WORKERS <= 1 or len(points) < 2:
        return [func(point) for point in points]

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=WORKERS) as pool:
        tasks = [loop.run_in_executor(pool, func, p) for p in points]
        return list(await asyncio.gather(*tasks))


def _phase_point(config: ExperimentConfig, point: Row) -> SweepRow:
    n, mass = point
    try:
        trial = replace(
            config,
            geometry=replace(config.geometry, N=n),
            mass_spec=replace(config.mass_spec, mass=mass),
        )
        profile = full_profile(trial.mass_spec, trial.geometry, trial.drive)
    except (CollisionError, GeometryError):
        return SweepRow(point, {"step2_phase_rad": 0.0}, ok=False)

    spec = trial.mass_spec
    dB = trial.drive.field_gradient
    ok = dB > 0 and profile.end_gap >= recapture_gap(spec, dB)
    phase = step2_phase(mass, profile)
    return SweepRow(point, {"step2_phase_rad": phase}, ok=ok)


async def sweep_phase_vs_mass(
    n_values: Iterable[float],
    masses: Iterable[float],
    config: ExperimentConfig,
) -> SweepResult:
    """Фаза шага 2 по сетке (N, m); ok=False, если нет перезахвата."""
    points = _grid(n_values, masses)
    rows = await _evaluate(partial(_phase_point, config), points)
    logger.info("phase sweep: %d points", len(rows))
    return SweepResult(
        ("N", "mass_kg"), ("N", "mass_kg", "step2_phase_rad", "ok"), rows
    )


def _decoherence_point(
    config: ExperimentConfig,
    profile: TrajectoryProfile,
    limit: float,
    point: Row,
) -> SweepRow:
    density, temperature = point
    env = EnvironmentSpec(
        density, temperature, config.environment.internal_temperature
    )
    exponent = accumulated_exponent(
        env, config.mass_spec, profile, config.drive
    )
    return SweepRow(
        point,
        {
            "exponent": exponent,
            "limit": limit,
            "pressure_Pa": pressure(env),
        },
        ok=exponent < limit,
    )


async def sweep_decoherence(
    densities: Iterable[float],
    temperatures: Iterable[float],
    config: ExperimentConfig,
) -> SweepResult:
    """
    Показатель декогеренции по (n_V, T_ex) и граница Phi_eff / 2.

    Первые столбцы n_V,exponent,limit,pass; за ними T_ex_K и pressure_Pa.
    """
    profile = full_profile(config.mass_spec, config.geometry, config.drive)
    limit = total_phase(config, profile=profile).total / 2
    points = _grid(densities, temperatures)
    rows = await _evaluate(
        partial(_decoherence_point, config, profile, limit), points
    )
    return SweepResult(
        ("n_V", "T_ex_K"),
        ("n_V", "exponent", "limit", "pass", "T_ex_K", "pressure_Pa"),
        rows,
        flag="pass",
    )


def _deflection_point(
    config: ExperimentConfig, profile: TrajectoryProfile, point: Row
) -> SweepRow:
    (u,) = point
    force = max_imbalance_force(config.mass_spec, profile, u)
    return SweepRow(
        point,
        {"deflection": deflection(force, config.plate), "force_N": force},
    )


async def sweep_deflection(
    u_values: Iterable[float], config: ExperimentConfig
) -> SweepResult:
    """Прогиб пластины в худшем случае для каждого u: u,deflection,force_N."""
    profile = full_profile(config.mass_spec, config.geometry, config.drive)
    points = _grid(u_values)
    rows = await _evaluate(
        partial(_deflection_point, config, profile), points
    )
    return SweepResult(("u",), ("u", "deflection", "force_N"), rows)
