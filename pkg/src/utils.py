"""Разбор величин с единицами измерения и их форматирование."""

import math
import re

# Число с необязательной единицей: 23um, 500 ms, 1e4 T/m, 3.5 g/cm3
QUANTITY_PATTERN = re.compile(
    r"^\s*(?P<value>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)"
    r"\s*(?P<unit>[^\s\d.+-][^\s]*)?\s*$"
)

# Множители для перевода в СИ; регистр единицы значим (ms и Ms различны)
UNIT_MULTIPLIERS = {
    # Длина
    "m": 1.0,
    "mm": 1e-3,
    "um": 1e-6,
    "µm": 1e-6,
    "μm": 1e-6,
    "мкм": 1e-6,
    "nm": 1e-9,
    # Время
    "s": 1.0,
    "ms": 1e-3,
    "us": 1e-6,
    "µs": 1e-6,
    "с": 1.0,
    "мс": 1e-3,
    # Масса
    "kg": 1.0,
    "g": 1e-3,
    # Градиент поля
    "T/m": 1.0,
    # Плотность
    "kg/m3": 1.0,
    "g/cm3": 1e3,
    # Концентрация газа
    "m-3": 1.0,
    "/m3": 1.0,
    "cm-3": 1e6,
    # Температура
    "K": 1.0,
    "mK": 1e-3,
    # Давление и модуль Юнга
    "Pa": 1.0,
    "kPa": 1e3,
    "MPa": 1e6,
    "GPa": 1e9,
    # Фаза
    "rad": 1.0,
    "mrad": 1e-3,
}

# Приставки для вывода
SI_PREFIXES = (
    (1e9, "G"),
    (1e6, "M"),
    (1e3, "k"),
    (1.0, ""),
    (1e-3, "m"),
    (1e-6, "µ"),
    (1e-9, "n"),
    (1e-12, "p"),
    (1e-15, "f"),
)


def parse_quantity(text: str) -> float | None:
    """
    Парсит строку величины в число в единицах СИ.

    Поддерживаемые форматы:
    - 1e-15 - уже в СИ
    - 23um, 23 µm, 23 мкм - микрометры
    - 500ms, 500 мс - миллисекунды
    - 3.5 g/cm3 - плотность
    - 1e4 T/m - градиент поля

    Возвращает None если формат или единица неверны.
    """
    if not text:
        return None

    match = QUANTITY_PATTERN.match(text)
    if not match:
        return None

    value = float(match.group("value"))
    unit = match.group("unit")
    if unit is None:
        return value

    multiplier = UNIT_MULTIPLIERS.get(unit)
    if multiplier is None:
        return None

    return value * multiplier


def format_si(value: float, unit: str, digits: int = 3) -> str:
    """Форматирует величину с приставкой СИ: 2.32e-5 m -> 23.2 µm."""
    if value == 0 or not math.isfinite(value):
        return f"{value:g} {unit}"

    magnitude = abs(value)
    for factor, prefix in SI_PREFIXES:
        if magnitude >= factor:
            return f"{value / factor:.{digits}g} {prefix}{unit}"

    return f"{value:.{digits}e} {unit}"
