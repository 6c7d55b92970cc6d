"""Манифест запуска и его запись в реестр."""

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from src.common.export import write_json
from src.config import TOOL_VERSION
from src.database.core import async_session
from src.database.models import RunRecord

UTC = timezone.utc

MANIFEST_NAME = "manifest.json"


@dataclass(frozen=True, slots=True)
class RunManifest:
    subcommand: str
    config_hash: str
    exit_code: int
    outputs: list[str] = field(default_factory=list)
    tool_version: str = TOOL_VERSION
    timestamp: str = field(
        default_factory=lambda: datetime.now(UTC).isoformat(
            timespec="seconds"
        )
    )

    def as_record(self) -> dict[str, object]:
        return {
            "subcommand": self.subcommand,
            "config_hash": self.config_hash,
            "exit_code": self.exit_code,
            "outputs": self.outputs,
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
        }


def write_manifest(manifest: RunManifest, out_dir: Path) -> Path:
    return write_json(out_dir / MANIFEST_NAME, manifest.as_record())


async def record_run(manifest: RunManifest) -> int:
    """Сохраняет манифест в реестр запусков, возвращает id записи."""
    async with async_session() as session:
        record = RunRecord(
            subcommand=manifest.subcommand,
            config_hash=manifest.config_hash,
            tool_version=manifest.tool_version,
            exit_code=manifest.exit_code,
            timestamp=manifest.timestamp,
            outputs=json.dumps(manifest.outputs),
        )
        session.add(record)
        await session.commit()
        return record.id
