import os
import sys

from dotenv import load_dotenv

load_dotenv()

TOOL_VERSION = "0.3.0"


def _env_float(name: str, default: float) -> float:
    """Читает положительное число из переменной окружения."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        value = -1.0
    if value <= 0:
        print(f"Error: {name} must be a positive number", file=sys.stderr)
        sys.exit(2)
    return value


DB_NAME = os.getenv("QGEM_DB_NAME", "qgem_runs.db")
LOG_LEVEL = os.getenv("QGEM_LOG_LEVEL", "INFO").upper()

# Размер пула процессов для свипов (1 - считать в текущем процессе)
WORKERS = int(_env_float("QGEM_WORKERS", 1))

# Шаг интегратора по умолчанию, с
TIME_STEP = _env_float("QGEM_TIME_STEP", 1e-4)

# Средняя масса молекулы воздуха (~29 а.е.м.), кг
AIR_MOLECULE_MASS = _env_float("QGEM_AIR_MASS", 4.8e-26)

# Im((eps-1)/(eps+2)) для каналов поглощения и излучения
IM_POLARIZABILITY = _env_float("QGEM_IM_POLARIZABILITY", 1e-5)
