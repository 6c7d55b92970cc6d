"""Маршрутизация подкоманд CLI."""

from collections.abc import Awaitable, Callable
from dataclasses import dataclass, field
from pathlib import Path

from src.designer.experiment import ExperimentConfig

# Коды выхода
EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2


@dataclass(frozen=True, slots=True)
class RunContext:
    config: ExperimentConfig
    out_dir: Path
    config_hash: str


@dataclass(slots=True)
class CommandResult:
    exit_code: int = EXIT_OK
    outputs: list[Path] = field(default_factory=list)
    summary: list[str] = field(default_factory=list)


Handler = Callable[[RunContext], Awaitable[CommandResult]]


@dataclass(frozen=True, slots=True)
class Command:
    name: str
    description: str
    handler: Handler


class CommandRouter:
    """Набор подкоманд; роутеры можно вкладывать друг в друга."""

    def __init__(self, name: str) -> None:
        self.name = name
        self.commands: dict[str, Command] = {}

    def command(
        self, name: str, description: str
    ) -> Callable[[Handler], Handler]:
        def register(handler: Handler) -> Handler:
            if name in self.commands:
                raise ValueError(f"command '{name}' is already registered")
            self.commands[name] = Command(name, description, handler)
            return handler

        return register

    def include_router(self, router: "CommandRouter") -> None:
        for name, command in router.commands.items():
            if name in self.commands:
                raise ValueError(f"command '{name}' is already registered")
            self.commands[name] = command

    def resolve(self, name: str) -> Command | None:
        return self.commands.get(name)
