"""Таблицы графиков: фаза от массы, декогеренция, прогиб."""

from dataclasses import replace
from pathlib import Path

import numpy as np

from src.commands.router import CommandResult, CommandRouter, RunContext
from src.common.export import write_csv
from src.designer.experiment import ExperimentConfig
from src.designer.sweeps import (
    SweepResult,
    sweep_decoherence,
    sweep_deflection,
    sweep_phase_vs_mass,
)

router = CommandRouter(name="figures")

# Кривые по N для графиков фазы от массы
FIGURE_N_VALUES = (20.0, 40.0, 57.0, 100.0, 200.0)

# Сетка масс, кг
FIGURE_MASSES = np.logspace(-16, -13, 31)

# Сильный привод для fig3
STRONG_GRADIENT = 1e6
STRONG_FLIGHT_TIME = 2.5

# Плотности газа, м^-3, и внешние температуры, К
FIGURE_DENSITIES = np.logspace(5, 10, 51)
FIGURE_TEMPERATURES = (1.0, 4.0, 10.0, 20.0)

# Смещения масс в радиусах
FIGURE_OFFSETS = np.linspace(0.0, 0.5, 51)


def _write_sweep(
    ctx: RunContext,
    name: str,
    result: SweepResult,
    config: ExperimentConfig,
) -> Path:
    comments = {"subcommand": name, **config.as_record()}
    return write_csv(
        ctx.out_dir / f"{name}.csv", result.header(), result.table(), comments
    )


def _summary(name: str, result: SweepResult, path: Path) -> list[str]:
    passed = sum(row.ok for row in result.rows)
    return [
        f"✅ {name}: {len(result.rows)} точек, "
        f"{passed} проходят, файл {path.name}"
    ]


@router.command("fig3", "Фаза шага 2 от массы при 1e6 Тл/м и 2.5 с")
async def run_fig3(ctx: RunContext) -> CommandResult:
    config = replace(
        ctx.config,
        drive=replace(
            ctx.config.drive,
            field_gradient=STRONG_GRADIENT,
            flight_time=STRONG_FLIGHT_TIME,
        ),
    )
    result = await sweep_phase_vs_mass(
        FIGURE_N_VALUES, FIGURE_MASSES, config
    )
    path = _write_sweep(ctx, "fig3", result, config)
    return CommandResult(outputs=[path], summary=_summary("fig3", result, path))


@router.command("fig4", "Фаза шага 2 от массы для привода из конфигурации")
async def run_fig4(ctx: RunContext) -> CommandResult:
    result = await sweep_phase_vs_mass(
        FIGURE_N_VALUES, FIGURE_MASSES, ctx.config
    )
    path = _write_sweep(ctx, "fig4", result, ctx.config)
    return CommandResult(outputs=[path], summary=_summary("fig4", result, path))


@router.command("fig5", "Показатель декогеренции от плотности газа")
async def run_fig5(ctx: RunContext) -> CommandResult:
    result = await sweep_decoherence(
        FIGURE_DENSITIES, FIGURE_TEMPERATURES, ctx.config
    )
    path = _write_sweep(ctx, "fig5", result, ctx.config)
    return CommandResult(outputs=[path], summary=_summary("fig5", result, path))


@router.command("fig6", "Прогиб пластины от смещения масс")
async def run_fig6(ctx: RunContext) -> CommandResult:
    result = await sweep_deflection(FIGURE_OFFSETS, ctx.config)
    path = _write_sweep(ctx, "fig6", result, ctx.config)
    return CommandResult(outputs=[path], summary=_summary("fig6", result, path))
