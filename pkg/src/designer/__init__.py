"""Поиск и свипы по пространству параметров."""

from src.designer.experiment import (
    ExperimentConfig,
    build_config,
    flagship_config,
)
from src.designer.feasibility import FeasibilityReport, feasibility
from src.designer.search import min_feasible_mass, saturating_n
from src.designer.sweeps import (
    SweepResult,
    sweep_decoherence,
    sweep_deflection,
    sweep_phase_vs_mass,
)

__all__ = [
    "ExperimentConfig",
    "FeasibilityReport",
    "SweepResult",
    "build_config",
    "feasibility",
    "flagship_config",
    "min_feasible_mass",
    "saturating_n",
    "sweep_decoherence",
    "sweep_deflection",
    "sweep_phase_vs_mass",
]
