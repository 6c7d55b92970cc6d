from sqlalchemy import DateTime, Integer, String, Text, func
from sqlalchemy.orm import Mapped, mapped_column

from src.database.core import Base


class RunRecord(Base):
    """Запуск CLI: подкоманда, хеш конфигурации и записанные файлы."""

    __tablename__ = "runs"
    id: Mapped[int] = mapped_column(Integer, primary_key=True)
    subcommand: Mapped[str] = mapped_column(String)
    config_hash: Mapped[str] = mapped_column(String(64), index=True)
    tool_version: Mapped[str] = mapped_column(String)
    exit_code: Mapped[int] = mapped_column(Integer, default=0)
    # Временная метка манифеста, UTC ISO 8601
    timestamp: Mapped[str] = mapped_column(String)
    # Список путей в формате JSON: ["out/report.json", ...]
    outputs: Mapped[str] = mapped_column(Text, default="[]")
    created_at: Mapped[str] = mapped_column(
        DateTime, server_default=func.now()
    )
