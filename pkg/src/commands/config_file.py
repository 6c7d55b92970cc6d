"""Разбор плоского файла конфигурации "ключ = значение"."""

import hashlib
import json
from pathlib import Path

from src.common.errors import (
    ConfigError,
    GeometryError,
    KeyValidationError,
    UnknownMaterialError,
    ValidationError,
)
from src.designer.experiment import ExperimentConfig, build_config
from src.physics.constants import preset
from src.physics.witness import WitnessOperator
from src.utils import parse_quantity

# Тип значения для каждого допустимого ключа
KEY_KINDS = {
    "mass_kg": "positive",
    "material": "dielectric",
    "field_gradient_T_per_m": "non_negative",
    "N": "multiplier",
    "tau_s": "non_negative",
    "t_int_s": "non_negative",
    "time_step_s": "positive",
    "n_V_per_m3": "non_negative",
    "T_ex_K": "non_negative",
    "T_i_K": "non_negative",
    "plate_length_m": "positive",
    "plate_thickness_m": "positive",
    "plate_material": "conductor",
    "u": "fraction",
    "phase_target_rad": "positive",
    "im_polarizability": "non_negative",
    "dephasing": "dephasing",
    "witness": "witness",
    "saturate_n": "flag",
}

TRUE_WORDS = {"true", "yes", "on", "1", "да"}
FALSE_WORDS = {"false", "no", "off", "0", "нет"}


def check_number(kind: str, value: float) -> str | None:
    """Проверяет число. Возвращает текст ошибки или None."""
    if kind == "positive" and value <= 0:
        return "must be positive"
    if kind == "non_negative" and value < 0:
        return "must be >= 0"
    if kind == "multiplier" and value <= 1:
        return "must be > 1"
    if kind == "fraction" and not 0 <= value <= 0.5:
        return "must lie in [0, 0.5]"
    return None


def check_material(kind: str, name: str) -> str | None:
    """Материал должен существовать и подходить по назначению."""
    try:
        mat = preset(name)
    except UnknownMaterialError as e:
        return str(e)
    if kind == "dielectric" and mat.dielectric_constant is None:
        return f"{mat.name} is not a dielectric"
    if kind == "conductor" and mat.youngs_modulus is None:
        return f"{mat.name} has no Young's modulus"
    return None


def _convert(
    key: str, raw: str, line: int
) -> float | str | bool:
    kind = KEY_KINDS[key]

    if kind in ("dielectric", "conductor"):
        error = check_material(kind, raw)
        if error:
            raise ConfigError(error, line=line, key=key)
        return raw.lower()

    if kind == "dephasing":
        raw = raw.lower()
        if raw not in ("joint", "independent"):
            raise ConfigError(
                "expected 'joint' or 'independent'", line=line, key=key
            )
        return raw

    if kind == "witness":
        try:
            WitnessOperator.from_labels(raw)
        except ValidationError as e:
            raise ConfigError(str(e), line=line, key=key) from None
        return raw

    if kind == "flag":
        word = raw.lower()
        if word in TRUE_WORDS:
            return True
        if word in FALSE_WORDS:
            return False
        raise ConfigError("expected true or false", line=line, key=key)

    value = parse_quantity(raw)
    if value is None:
        raise ConfigError(f"cannot parse '{raw}'", line=line, key=key)
    error = check_number(kind, value)
    if error:
        raise ConfigError(error, line=line, key=key)
    return value


def parse_config_text(text: str) -> ExperimentConfig:
    """Разбирает текст конфигурации; пропущенные ключи - основная схема."""
    values: dict[str, float | str | bool] = {}
    lines: dict[str, int] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key:
            raise ConfigError("expected 'key = value'", line=number)
        if key not in KEY_KINDS:
            raise ConfigError("unknown key", line=number, key=key)
        if key in values:
            raise ConfigError("duplicate key", line=number, key=key)
        if not raw:
            raise ConfigError("empty value", line=number, key=key)
        values[key] = _convert(key, raw, number)
        lines[key] = number

    try:
        return build_config(values)
    except KeyValidationError as e:
        raise ConfigError(
            str(e), line=lines.get(e.key), key=e.key
        ) from None
    except (ValidationError, GeometryError) as e:
        raise ConfigError(str(e)) from None


def parse_config(path: Path) -> ExperimentConfig:
    """Читает файл конфигурации."""
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except UnicodeDecodeError:
        raise ConfigError(f"config file is not UTF-8 text: {path}") from None
    return parse_config_text(text)


def config_hash(config: ExperimentConfig) -> str:
    """SHA-256 канонической записи конфигурации."""
    canonical = json.dumps(config.as_record(), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
