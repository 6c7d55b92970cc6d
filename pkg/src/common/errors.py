"""Исключения расчётного ядра."""


class QgemError(Exception):
    """Базовая ошибка проекта."""


class ValidationError(QgemError, ValueError):
    """Нарушен инвариант входных данных."""


class KeyValidationError(ValidationError):
    """Ошибка значения, привязанная к ключу конфигурации."""

    def __init__(self, message: str, key: str) -> None:
        super().__init__(message)
        self.key = key


class GeometryError(QgemError, ValueError):
    """Недопустимая геометрия: перекрытие сфер или нулевой зазор."""


class DomainError(QgemError, ValueError):
    """Формула вызвана вне области применимости."""


class CollisionError(QgemError):
    """Внутренняя ветвь достигла пластины во время свободного падения."""

    def __init__(self, time: float, gap: float) -> None:
        super().__init__(
            f"branch reached the plate at t={time:.6g} s (gap {gap:.3g} m)"
        )
        self.time = time
        self.gap = gap


class NoSolutionError(QgemError):
    """Поиск корня или минимума не нашёл решения в интервале."""


class UnknownMaterialError(QgemError, LookupError):
    """Неизвестный пресет материала."""


class ConfigError(QgemError):
    """Ошибка файла конфигурации (строка или ключ)."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        key: str | None = None,
    ) -> None:
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key '{key}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.key = key
