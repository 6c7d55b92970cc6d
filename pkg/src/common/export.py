"""Запись CSV и JSON с полной точностью."""

import csv
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path

# 17 значащих цифр достаточно для точного восстановления double
FLOAT_FORMAT = ".17g"


def format_cell(value: object) -> str:
    """Число в 17 значащих цифр, флаг как true/false."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    return str(value)


def write_csv(
    path: Path,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
    comments: Mapping[str, object] | None = None,
) -> Path:
    """
    Пишет CSV: блок комментариев "# key = value", заголовок, строки.

    Комментарии фиксируют конфигурацию запуска.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as f:
        for key, value in (comments or {}).items():
            f.write(f"# {key} = {format_cell(value)}\n")
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
    return path


def _jsonable(value: object) -> object:
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    return value


def write_json(path: Path, record: Mapping[str, object]) -> Path:
    """Плоская JSON-запись с отсортированными ключами."""
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {key: _jsonable(value) for key, value in record.items()}
    path.write_text(
        json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    return path
