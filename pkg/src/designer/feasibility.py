"""Проверка конструкции по всем ограничениям сразу."""

import logging
import math
from dataclasses import dataclass

from src.common.errors import CollisionError, GeometryError
from src.designer.experiment import ExperimentConfig
from src.physics.casimir import recapture_gap
from src.physics.decoherence import DecoherenceBudget, decoherence_budget
from src.physics.kinematics import TrajectoryProfile, full_profile
from src.physics.phase import PhaseBreakdown, total_phase
from src.physics.plate import (
    PlateAssessment,
    assess_plate,
    max_imbalance_force,
)
from src.physics.witness import detectability

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class FeasibilityReport:
    phase: PhaseBreakdown | None
    recapture_ok: bool
    collision_ok: bool
    decoherence: DecoherenceBudget | None
    witness_ok: bool
    plate: PlateAssessment | None
    overall: bool
    phase_ok: bool = False
    end_gap: float | None = None
    recapture_gap: float | None = None
    witness_margin: float | None = None
    collision_time: float | None = None

    def failures(self) -> list[str]:
        """Названия невыполненных условий."""
        checks = {
            "collision": self.collision_ok,
            "recapture": self.recapture_ok,
            "phase": self.phase_ok,
            "witness": self.witness_ok,
            "which-path": self.plate is not None
            and self.plate.which_path_ok,
        }
        return [name for name, ok in checks.items() if not ok]

    def as_record(self) -> dict[str, float | str | bool | None]:
        record: dict[str, float | str | bool | None] = {
            "overall": self.overall,
            "recapture_ok": self.recapture_ok,
            "collision_ok": self.collision_ok,
            "witness_ok": self.witness_ok,
            "phase_ok": self.phase_ok,
            "end_gap_m": self.end_gap,
            "recapture_gap_m": self.recapture_gap,
            "witness_margin_rad": self.witness_margin,
            "collision_time_s": self.collision_time,
        }
        for part in (self.phase, self.decoherence, self.plate):
            if part is not None:
                record.update(part.as_record())
        return record


def _required_gap(config: ExperimentConfig) -> float:
    """Зазор перезахвата; без градиента поля перезахват невозможен."""
    if config.drive.field_gradient <= 0:
        return math.inf
    return recapture_gap(config.mass_spec, config.drive.field_gradient)


def _collided(
    config: ExperimentConfig, error: CollisionError | GeometryError
) -> FeasibilityReport:
    logger.warning("design rejected: %s", error)
    return FeasibilityReport(
        phase=None,
        recapture_ok=False,
        collision_ok=False,
        decoherence=None,
        witness_ok=False,
        plate=None,
        overall=False,
        recapture_gap=_required_gap(config),
        collision_time=getattr(error, "time", None),
    )


def _plate_check(
    config: ExperimentConfig, profile: TrajectoryProfile
) -> PlateAssessment | None:
    try:
        force = max_imbalance_force(
            config.mass_spec, profile, config.placement_uncertainty
        )
    except GeometryError as e:
        logger.warning("plate check failed: %s", e)
        return None
    return assess_plate(config.plate, force)


def feasibility(config: ExperimentConfig) -> FeasibilityReport:
    """Траектория, фаза, декогеренция, свидетель и пластина."""
    spec = config.mass_spec
    drive = config.drive
    try:
        profile = full_profile(spec, config.geometry, drive)
        phase = total_phase(config, profile=profile)
    except (CollisionError, GeometryError) as e:
        return _collided(config, e)

    x_min = _required_gap(config)
    recapture_ok = profile.end_gap >= x_min

    budget = decoherence_budget(config.environment, spec, profile, drive)
    duration = profile.duration
    gamma = budget.exponent / duration if duration > 0 else 0.0
    witness = detectability(phase.total, gamma, duration)

    plate = _plate_check(config, profile)
    phase_ok = phase.total >= config.phase_target
    overall = (
        recapture_ok
        and witness.ok
        and phase_ok
        and plate is not None
        and plate.which_path_ok
    )

    report = FeasibilityReport(
        phase=phase,
        recapture_ok=recapture_ok,
        collision_ok=True,
        decoherence=budget,
        witness_ok=witness.ok,
        plate=plate,
        overall=overall,
        phase_ok=phase_ok,
        end_gap=profile.end_gap,
        recapture_gap=x_min,
        witness_margin=witness.margin,
    )
    if not overall:
        logger.warning(
            "design infeasible: %s", ", ".join(report.failures())
        )
    return report
