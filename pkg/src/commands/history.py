"""Последние запуски из реестра."""

import json

from sqlalchemy import select

from src.commands.router import CommandResult, CommandRouter, RunContext
from src.database.core import async_session
from src.database.models import RunRecord

router = CommandRouter(name="history")

# Сколько запусков показывать
HISTORY_LIMIT = 20


async def recent_runs(limit: int = HISTORY_LIMIT) -> list[RunRecord]:
    """Последние записи реестра, новые первыми."""
    async with async_session() as session:
        result = await session.execute(
            select(RunRecord).order_by(RunRecord.id.desc()).limit(limit)
        )
        return list(result.scalars().all())


@router.command("history", "Последние запуски")
async def run_history(ctx: RunContext) -> CommandResult:
    runs = await recent_runs()
    if not runs:
        return CommandResult(summary=["Запусков пока нет"])

    lines = [f"📋 Последние запуски ({len(runs)}):"]
    for run in runs:
        mark = "✅" if run.exit_code == 0 else "❌"
        files = len(json.loads(run.outputs or "[]"))
        lines.append(
            f"{mark} #{run.id} {run.timestamp} {run.subcommand} "
            f"[{run.config_hash[:12]}] файлов: {files}"
        )
    return CommandResult(summary=lines)
