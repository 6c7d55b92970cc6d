"""Физическое ядро: силы, траектории, фазы, декогеренция, пластина."""

from src.physics.casimir import TestMassSpec
from src.physics.constants import CONSTANTS, MaterialPreset, preset
from src.physics.decoherence import DecoherenceBudget, EnvironmentSpec
from src.physics.kinematics import DriveSpec, GeometrySpec, TrajectoryProfile
from src.physics.phase import PhaseBreakdown
from src.physics.plate import PlateAssessment, PlateSpec

__all__ = [
    "CONSTANTS",
    "DecoherenceBudget",
    "DriveSpec",
    "EnvironmentSpec",
    "GeometrySpec",
    "MaterialPreset",
    "PhaseBreakdown",
    "PlateAssessment",
    "PlateSpec",
    "TestMassSpec",
    "TrajectoryProfile",
    "preset",
]
