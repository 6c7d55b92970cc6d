"""Подкоманды анализа одной конструкции."""

import logging

import numpy as np

from src.commands.router import (
    EXIT_INFEASIBLE,
    CommandResult,
    CommandRouter,
    RunContext,
)
from src.common.errors import CollisionError, GeometryError, NoSolutionError
from src.common.export import write_csv, write_json
from src.designer.feasibility import feasibility
from src.designer.search import min_feasible_mass, saturating_n
from src.physics.casimir import (
    TestMassSpec,
    plate_gravity_acceleration,
    recapture_gap,
)
from src.physics.decoherence import (
    decoherence_budget,
    pressure,
    threshold_density,
)
from src.physics.kinematics import (
    drift_energy_residual,
    full_profile,
    outer_branch_drift,
)
from src.physics.phase import total_phase
from src.physics.plate import assess_plate, max_imbalance_force
from src.physics.witness import detectability, witness_root, witness_scan
from src.utils import format_si

logger = logging.getLogger(__name__)

router = CommandRouter(name="analysis")

# Точек в скане свидетеля
WITNESS_SCAN_POINTS = 101


def _mark(ok: bool) -> str:
    return "✅" if ok else "❌"


def _collision(error: CollisionError | GeometryError) -> CommandResult:
    return CommandResult(
        exit_code=EXIT_INFEASIBLE,
        summary=[f"❌ Ветвь касается пластины: {error}"],
    )


@router.command("feasibility", "Проверка конструкции по всем условиям")
async def run_feasibility(ctx: RunContext) -> CommandResult:
    report = feasibility(ctx.config)
    record = {**report.as_record(), "config_hash": ctx.config_hash}
    path = write_json(ctx.out_dir / "feasibility.json", record)

    summary = [
        f"{_mark(report.overall)} Конструкция "
        + ("реализуема" if report.overall else "не реализуема"),
        f"{_mark(report.collision_ok)} Без столкновения с пластиной",
        f"{_mark(report.recapture_ok)} Перезахват",
    ]
    if report.phase is not None:
        summary.append(
            f"{_mark(report.phase_ok)} Фаза: {report.phase.total:.4g} рад "
            f"(цель {ctx.config.phase_target:.3g})"
        )
    summary.append(f"{_mark(report.witness_ok)} Свидетель запутанности")
    if report.plate is not None:
        summary.append(
            f"{_mark(report.plate.which_path_ok)} Пластина не выдаёт путь"
        )
    return CommandResult(
        exit_code=0 if report.overall else EXIT_INFEASIBLE,
        outputs=[path],
        summary=summary,
    )


@router.command("min-mass", "Минимальная масса для целевой фазы")
async def run_min_mass(ctx: RunContext) -> CommandResult:
    config = ctx.config
    drive = config.drive
    n = None if config.saturate_n else config.geometry.N
    try:
        mass = min_feasible_mass(
            config.phase_target,
            drive.field_gradient,
            drive.split_time,
            drive.flight_time,
            N=n,
            material=config.material,
            plate_thickness=config.geometry.plate_thickness,
            time_step=drive.time_step,
        )
    except NoSolutionError as e:
        return CommandResult(
            exit_code=EXIT_INFEASIBLE, summary=[f"❌ Масса не найдена: {e}"]
        )

    spec = TestMassSpec.from_material(
        mass, config.material, config.mass_spec.polarizability_imag
    )
    if n is None:
        n = saturating_n(spec, drive, config.geometry.plate_thickness)
    record = {
        "min_mass_kg": mass,
        "N": n,
        "saturated_n": config.saturate_n,
        "phase_target_rad": config.phase_target,
        "radius_m": spec.radius,
        "recapture_gap_m": recapture_gap(spec, drive.field_gradient),
        "config_hash": ctx.config_hash,
    }
    path = write_json(ctx.out_dir / "min_mass.json", record)
    return CommandResult(
        outputs=[path],
        summary=[
            f"✅ Минимальная масса: {mass:.4g} кг (N = {n:.4g})",
        ],
    )


@router.command("trajectory", "Профиль разделения ветвей и зазора")
async def run_trajectory(ctx: RunContext) -> CommandResult:
    config = ctx.config
    spec = config.mass_spec
    try:
        profile = full_profile(spec, config.geometry, config.drive)
    except CollisionError as e:
        return _collision(e)

    comments = {"subcommand": "trajectory", **config.as_record()}
    csv_path = write_csv(
        ctx.out_dir / "trajectory.csv",
        ["t", "separation", "s", "gap"],
        profile.rows(),
        comments,
    )
    record = {
        "split_size_m": profile.split_size,
        "center_distance_m": profile.split_size + profile.inner_separation,
        "initial_gap_m": profile.initial_gap,
        "s_max_m": profile.s_max,
        "end_gap_m": profile.end_gap,
        "tau1_s": profile.tau1,
        "duration_s": profile.duration,
        "a_mag_m_per_s2": profile.a_mag,
        "energy_residual": drift_energy_residual(profile),
        "outer_branch_drift_m": outer_branch_drift(
            spec, config.geometry, config.drive
        ),
        "config_hash": ctx.config_hash,
    }
    json_path = write_json(ctx.out_dir / "trajectory.json", record)
    return CommandResult(
        outputs=[csv_path, json_path],
        summary=[
            f"✅ dx = {format_si(profile.split_size, 'm')}, "
            f"s_max = {format_si(profile.s_max, 'm')}, "
            f"tau1 = {profile.tau1:.4g} s",
        ],
    )


@router.command("phase", "Фаза запутывания по шагам")
async def run_phase(ctx: RunContext) -> CommandResult:
    try:
        phase = total_phase(ctx.config)
    except (CollisionError, GeometryError) as e:
        return _collision(e)
    record = {**phase.as_record(), "config_hash": ctx.config_hash}
    path = write_json(ctx.out_dir / "phase.json", record)
    return CommandResult(
        outputs=[path],
        summary=[
            f"✅ Фаза: шаг 1 {phase.step1:.4g}, шаг 2 {phase.step2:.4g}, "
            f"шаг 3 {phase.step3:.4g}, всего {phase.total:.4g} рад",
        ],
    )


@router.command("decoherence", "Бюджет декогеренции и пороговая плотность")
async def run_decoherence(ctx: RunContext) -> CommandResult:
    config = ctx.config
    try:
        profile = full_profile(config.mass_spec, config.geometry, config.drive)
        phase = total_phase(config, profile=profile)
    except (CollisionError, GeometryError) as e:
        return _collision(e)

    budget = decoherence_budget(
        config.environment, config.mass_spec, profile, config.drive
    )
    limit = phase.total / 2
    density = None
    if limit > 0:
        try:
            density = threshold_density(config, limit, profile=profile)
        except NoSolutionError as e:
            logger.warning("threshold density: %s", e)

    record = {
        **budget.as_record(),
        "limit": limit,
        "threshold_density_per_m3": density,
        "pressure_Pa": pressure(config.environment),
        "config_hash": ctx.config_hash,
    }
    path = write_json(ctx.out_dir / "decoherence.json", record)
    ok = budget.exponent < limit
    summary = [
        f"{_mark(ok)} Показатель {budget.exponent:.4g} "
        f"(граница {limit:.4g}), основной канал: {budget.dominant_channel}",
    ]
    if density is not None:
        summary.append(f"Пороговая плотность: {density:.3g} м^-3")
    return CommandResult(
        exit_code=0 if ok else EXIT_INFEASIBLE,
        outputs=[path],
        summary=summary,
    )


@router.command("witness-scan", "Tr(W rho) в зависимости от gamma*t")
async def run_witness_scan(ctx: RunContext) -> CommandResult:
    config = ctx.config
    try:
        phase = total_phase(config)
    except (CollisionError, GeometryError) as e:
        return _collision(e)

    operator = config.witness_operator
    grid = np.linspace(0.0, max(phase.total, 1e-12), WITNESS_SCAN_POINTS)
    rows = witness_scan(
        phase.dphi_ud, phase.dphi_du, grid, operator, config.dephasing
    )
    comments = {"subcommand": "witness-scan", **config.as_record()}
    csv_path = write_csv(
        ctx.out_dir / "witness_scan.csv",
        ["gamma_t", "trace_W_rho"],
        rows,
        comments,
    )

    try:
        root = witness_root(
            phase.dphi_ud, phase.dphi_du, operator, config.dephasing
        )
    except NoSolutionError as e:
        logger.warning("witness root: %s", e)
        root = None
    analytic = detectability(phase.total, 0.0, 0.0)
    record = {
        "phi_eff_rad": phase.total,
        "analytic_threshold": analytic.margin,
        "numeric_threshold": root,
        "witness": operator.label(),
        "dephasing": config.dephasing,
        "config_hash": ctx.config_hash,
    }
    json_path = write_json(ctx.out_dir / "witness.json", record)
    numeric = "нет" if root is None else f"{root:.4g}"
    return CommandResult(
        outputs=[csv_path, json_path],
        summary=[
            f"✅ Порог gamma*t: аналитический {analytic.margin:.4g}, "
            f"численный {numeric}",
        ],
    )


@router.command("plate", "Прогиб пластины и условие which-path")
async def run_plate(ctx: RunContext) -> CommandResult:
    config = ctx.config
    try:
        profile = full_profile(config.mass_spec, config.geometry, config.drive)
        force = max_imbalance_force(
            config.mass_spec, profile, config.placement_uncertainty
        )
    except (CollisionError, GeometryError) as e:
        return _collision(e)

    assessment = assess_plate(config.plate, force)
    record = {
        **assessment.as_record(),
        "force_max_N": force,
        "plate_gravity_m_per_s2": plate_gravity_acceleration(
            config.plate.density, config.plate.thickness
        ),
        "config_hash": ctx.config_hash,
    }
    path = write_json(ctx.out_dir / "plate.json", record)
    return CommandResult(
        exit_code=0 if assessment.which_path_ok else EXIT_INFEASIBLE,
        outputs=[path],
        summary=[
            f"{_mark(assessment.which_path_ok)} Прогиб "
            f"{assessment.deflection_max:.3g} м при разбросе "
            f"{assessment.ground_spread:.3g} м, L < "
            f"{assessment.length_bound:.3g} м",
        ],
    )
