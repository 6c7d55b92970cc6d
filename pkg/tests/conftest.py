import os
import tempfile
from collections.abc import Callable
from pathlib import Path

# Реестр запусков тестов - во временном каталоге, до импорта src.config
os.environ["QGEM_DB_NAME"] = str(
    Path(tempfile.mkdtemp(prefix="qgem-tests-")) / "runs.db"
)
os.environ["QGEM_WORKERS"] = "1"

import pytest  # noqa: E402

from src.designer.experiment import (  # noqa: E402
    ExperimentConfig,
    flagship_config,
)
from src.physics.kinematics import TrajectoryProfile, full_profile  # noqa: E402


# Эталонные CSV таблиц графиков
GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="перезаписать эталонные CSV в tests/golden",
    )


@pytest.fixture
def golden(request: pytest.FixtureRequest) -> Callable[[Path], None]:
    """Сравнивает файл с эталоном побайтно; без эталона записывает его."""
    update = request.config.getoption("--update-golden")

    def check(produced: Path) -> None:
        reference = GOLDEN_DIR / produced.name
        data = produced.read_bytes()
        if update or not reference.exists():
            GOLDEN_DIR.mkdir(exist_ok=True)
            reference.write_bytes(data)
            pytest.skip(f"эталон {reference.name} записан")
        assert data == reference.read_bytes()

    return check


@pytest.fixture(scope="session")
def flagship() -> ExperimentConfig:
    return flagship_config()


@pytest.fixture(scope="session")
def flagship_profile(flagship: ExperimentConfig) -> TrajectoryProfile:
    return full_profile(flagship.mass_spec, flagship.geometry, flagship.drive)
