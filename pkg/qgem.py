import argparse
import asyncio
import logging
import sys
from pathlib import Path

from src.commands import dispatcher
from src.commands.config_file import config_hash, parse_config
from src.commands.manifest import RunManifest, record_run, write_manifest
from src.commands.router import (
    EXIT_INPUT_ERROR,
    CommandResult,
    RunContext,
)
from src.common.errors import ConfigError, DomainError, ValidationError
from src.config import LOG_LEVEL
from src.database.core import engine, init_db
from src.designer.experiment import ExperimentConfig, flagship_config

logger = logging.getLogger("qgem")


def build_parser() -> argparse.ArgumentParser:
    """Аргументы командной строки."""
    commands = "\n".join(
        f"  {name:<14}{command.description}"
        for name, command in dispatcher.commands.items()
    )
    parser = argparse.ArgumentParser(
        prog="qgem",
        description="Расчёт экранированного эксперимента QGEM",
        epilog=f"Подкоманды:\n{commands}",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("subcommand", help="подкоманда, см. список ниже")
    parser.add_argument(
        "--config", type=Path, default=None, help="файл ключ = значение"
    )
    parser.add_argument(
        "--out", type=Path, default=Path("out"), help="каталог результатов"
    )
    parser.add_argument(
        "--quiet", action="store_true", help="без сводки и логов INFO"
    )
    return parser


async def run(
    subcommand: str, config: ExperimentConfig, out_dir: Path
) -> tuple[RunManifest, CommandResult]:
    """Выполняет подкоманду, пишет манифест и запись в реестр."""
    command = dispatcher.resolve(subcommand)
    if command is None:
        raise ConfigError(f"unknown subcommand '{subcommand}'")

    ctx = RunContext(config, out_dir, config_hash(config))
    out_dir.mkdir(parents=True, exist_ok=True)
    try:
        result = await command.handler(ctx)
    except (ValidationError, DomainError) as e:
        result = CommandResult(
            exit_code=EXIT_INPUT_ERROR, summary=[f"❌ Неверные данные: {e}"]
        )

    manifest = RunManifest(
        subcommand=subcommand,
        config_hash=ctx.config_hash,
        exit_code=result.exit_code,
        outputs=[path.name for path in result.outputs],
    )
    write_manifest(manifest, out_dir)
    await record_run(manifest)
    logger.info("run %s finished with code %d", subcommand, result.exit_code)
    return manifest, result


async def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING if args.quiet else LOG_LEVEL, force=True
    )

    if dispatcher.resolve(args.subcommand) is None:
        print(
            f"❌ Неизвестная подкоманда: {args.subcommand}", file=sys.stderr
        )
        return EXIT_INPUT_ERROR

    try:
        config = (
            parse_config(args.config) if args.config else flagship_config()
        )
    except ConfigError as e:
        print(f"❌ Ошибка конфигурации: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    await init_db()
    try:
        manifest, result = await run(args.subcommand, config, args.out)
    finally:
        await engine.dispose()

    if not args.quiet:
        for line in result.summary:
            print(line)
    return manifest.exit_code


if __name__ == "__main__":
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        print("Стоп")
