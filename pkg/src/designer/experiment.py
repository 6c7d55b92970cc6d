"""Полное описание одной конструкции эксперимента."""

from collections.abc import Callable
from dataclasses import dataclass
from typing import TypeVar

from src.common.errors import (
    GeometryError,
    KeyValidationError,
    ValidationError,
)
from src.config import IM_POLARIZABILITY, TIME_STEP
from src.physics.casimir import TestMassSpec
from src.physics.decoherence import EnvironmentSpec
from src.physics.kinematics import DriveSpec, GeometrySpec
from src.physics.plate import MAX_PLACEMENT_UNCERTAINTY, PlateSpec
from src.physics.witness import DephasingModel, WitnessOperator

# Основная конструкция: алмаз 1e-15 кг, N=57, 1e4 Тл/м, tau=0.5 с, 1 с
FLAGSHIP = {
    "mass_kg": 1e-15,
    "material": "diamond",
    "field_gradient_T_per_m": 1e4,
    "tau_s": 0.5,
    "t_int_s": 1.0,
    "N": 57.0,
    "plate_thickness_m": 1e-6,
    "plate_length_m": 1e-3,
    "plate_material": "copper",
    "n_V_per_m3": 1e7,
    "T_ex_K": 4.0,
    "T_i_K": 4.0,
    "u": 0.5,
    "phase_target_rad": 0.01,
}


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    mass_spec: TestMassSpec
    drive: DriveSpec
    geometry: GeometrySpec
    environment: EnvironmentSpec
    plate: PlateSpec
    placement_uncertainty: float = 0.5
    phase_target: float = 0.01
    material: str = "diamond"
    plate_material: str = "copper"
    dephasing: DephasingModel = "joint"
    witness: str = "II - XX - YZ - XZ"
    saturate_n: bool = False

    def __post_init__(self) -> None:
        if self.phase_target <= 0:
            raise ValidationError("phase target must be positive")
        if not 0 <= self.placement_uncertainty <= MAX_PLACEMENT_UNCERTAINTY:
            raise ValidationError("u must lie in [0, 0.5]")
        if self.dephasing not in ("joint", "independent"):
            raise ValidationError(f"unknown dephasing '{self.dephasing}'")
        WitnessOperator.from_labels(self.witness)
        self.geometry.initial_gap(self.mass_spec)

    @property
    def witness_operator(self) -> WitnessOperator:
        return WitnessOperator.from_labels(self.witness)

    def as_record(self) -> dict[str, float | str | bool]:
        """Плоская запись в единицах СИ с ключами файла конфигурации."""
        return {
            "mass_kg": self.mass_spec.mass,
            "material": self.material,
            "field_gradient_T_per_m": self.drive.field_gradient,
            "tau_s": self.drive.split_time,
            "t_int_s": self.drive.flight_time,
            "time_step_s": self.drive.time_step,
            "N": self.geometry.N,
            "plate_thickness_m": self.geometry.plate_thickness,
            "plate_length_m": self.plate.length,
            "plate_material": self.plate_material,
            "n_V_per_m3": self.environment.number_density,
            "T_ex_K": self.environment.external_temperature,
            "T_i_K": self.environment.internal_temperature,
            "u": self.placement_uncertainty,
            "phase_target_rad": self.phase_target,
            "im_polarizability": self.mass_spec.polarizability_imag,
            "dephasing": self.dephasing,
            "witness": self.witness,
            "saturate_n": self.saturate_n,
        }


# Ключи файла, отвечающие за каждую часть конструкции
SECTION_KEYS = {
    "mass_spec": ("mass_kg", "material", "im_polarizability"),
    "drive": (
        "field_gradient_T_per_m",
        "tau_s",
        "t_int_s",
        "time_step_s",
    ),
    "geometry": ("N", "plate_thickness_m"),
    "environment": ("n_V_per_m3", "T_ex_K", "T_i_K"),
    "plate": ("plate_length_m", "plate_thickness_m", "plate_material"),
    "layout": ("N", "mass_kg", "plate_thickness_m", "material"),
    "design": ("u", "phase_target_rad", "dephasing", "witness"),
}


T = TypeVar("T")


def _section(
    name: str,
    values: dict[str, float | str | bool],
    factory: Callable[[], T],
) -> T:
    """Строит часть конструкции; ошибка получает имя виновного ключа."""
    try:
        return factory()
    except KeyValidationError:
        raise
    except (ValidationError, GeometryError) as e:
        keys = SECTION_KEYS[name]
        key = next((k for k in keys if k in values), keys[0])
        raise KeyValidationError(str(e), key=key) from e


def build_config(values: dict[str, float | str | bool]) -> ExperimentConfig:
    """Собирает конфигурацию из плоских ключей поверх основной."""
    merged = {
        **FLAGSHIP,
        "time_step_s": TIME_STEP,
        "im_polarizability": IM_POLARIZABILITY,
        "dephasing": "joint",
        "witness": "II - XX - YZ - XZ",
        "saturate_n": False,
        **values,
    }
    thickness = float(merged["plate_thickness_m"])
    mass_spec = _section(
        "mass_spec",
        values,
        lambda: TestMassSpec.from_material(
            float(merged["mass_kg"]),
            str(merged["material"]),
            polarizability_imag=float(merged["im_polarizability"]),
        ),
    )
    drive = _section(
        "drive",
        values,
        lambda: DriveSpec(
            field_gradient=float(merged["field_gradient_T_per_m"]),
            split_time=float(merged["tau_s"]),
            flight_time=float(merged["t_int_s"]),
            time_step=float(merged["time_step_s"]),
        ),
    )
    geometry = _section(
        "geometry",
        values,
        lambda: GeometrySpec(N=float(merged["N"]), plate_thickness=thickness),
    )
    environment = _section(
        "environment",
        values,
        lambda: EnvironmentSpec(
            number_density=float(merged["n_V_per_m3"]),
            external_temperature=float(merged["T_ex_K"]),
            internal_temperature=float(merged["T_i_K"]),
        ),
    )
    plate = _section(
        "plate",
        values,
        lambda: PlateSpec.from_material(
            float(merged["plate_length_m"]),
            thickness,
            str(merged["plate_material"]),
        ),
    )
    _section("layout", values, lambda: geometry.initial_gap(mass_spec))
    return _section(
        "design",
        values,
        lambda: ExperimentConfig(
            mass_spec=mass_spec,
            drive=drive,
            geometry=geometry,
            environment=environment,
            plate=plate,
            placement_uncertainty=float(merged["u"]),
            phase_target=float(merged["phase_target_rad"]),
            material=str(merged["material"]),
            plate_material=str(merged["plate_material"]),
            dephasing=str(merged["dephasing"]),
            witness=str(merged["witness"]),
            saturate_n=bool(merged["saturate_n"]),
        ),
    )


def flagship_config() -> ExperimentConfig:
    """Основная экранированная конструкция."""
    return build_config({})
