"""Все подкоманды CLI."""

from src.commands.analysis import router as analysis_router
from src.commands.figures import router as figures_router
from src.commands.history import router as history_router
from src.commands.router import CommandRouter

dispatcher = CommandRouter(name="qgem")
dispatcher.include_router(analysis_router)
dispatcher.include_router(figures_router)
dispatcher.include_router(history_router)

__all__ = [
    "analysis_router",
    "dispatcher",
    "figures_router",
    "history_router",
]
