"""Общие исключения и запись результатов."""

from src.common.errors import (
    CollisionError,
    ConfigError,
    DomainError,
    GeometryError,
    KeyValidationError,
    NoSolutionError,
    QgemError,
    UnknownMaterialError,
    ValidationError,
)
from src.common.export import write_csv, write_json

__all__ = [
    "CollisionError",
    "ConfigError",
    "DomainError",
    "GeometryError",
    "KeyValidationError",
    "NoSolutionError",
    "QgemError",
    "UnknownMaterialError",
    "ValidationError",
    "write_csv",
    "write_json",
]
