"""
Component logging on top of loguru.

Usage:
    from graphex_sim.log import get_component_logger

    logger = get_component_logger("graphex_sim.generators")
    logger.info("CM draw", n=5050, half_edges=10000)
"""
import sys
from pathlib import Path
from typing import Optional

from loguru import logger as _root_logger

_FORMATS = {
    "beautiful": (
        "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
        "<cyan>{extra[component]}</cyan> | <level>{message}</level> | {extra}"
    ),
    "minimal": "{level: <8} | {extra[component]} | {message}",
}

_configured = False


def configure_logger(
    level: str = "INFO",
    fmt: str = "beautiful",
    console: bool = True,
    colors: bool = True,
    file_path: Optional[Path] = None,
) -> None:
    """
    Replace all loguru sinks according to the given options.

    Args:
        level: Minimum level name
        fmt: "beautiful", "minimal" or "json"
        console: Log to stderr
        colors: Colorize console output
        file_path: Optional log file
    """
    global _configured

    _root_logger.remove()
    _root_logger.configure(extra={"component": "graphex_sim"})
    serialize = fmt == "json"
    line_format = _FORMATS.get(fmt, _FORMATS["beautiful"])

    if console:
        _root_logger.add(
            sys.stderr,
            level=level.upper(),
            format=line_format,
            colorize=colors and not serialize,
            serialize=serialize,
        )
    if file_path is not None:
        _root_logger.add(
            str(file_path),
            level=level.upper(),
            format=line_format,
            serialize=serialize,
            enqueue=True,
        )
    _configured = True


def configure_from_settings() -> None:
    """Configure sinks from the global settings instance."""
    from .config import settings

    configure_logger(
        level=settings.log_level,
        fmt=settings.log_format,
        console=settings.log_console,
        colors=settings.log_colors,
        file_path=settings.log_file_path,
    )


def get_component_logger(component: str):
    """
    Get a logger bound to a component name.

    Args:
        component: Dotted component name, e.g. "graphex_sim.analysis.blocks"

    Returns:
        loguru logger with `component` in its extra context
    """
    if not _configured:
        configure_from_settings()
    return _root_logger.bind(component=component)
