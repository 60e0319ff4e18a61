"""Structured logging configuration for the four-mode toolkit."""

import sys
from typing import Any, Dict, Optional

from loguru import logger

from ..config import get_settings


def setup_logging(level: Optional[str] = None) -> None:
    """Configure structured logging with Loguru.

    Standard output carries CSV/JSON payloads, so every sink writes to stderr.
    """
    settings = get_settings()
    level = level or settings.log_level

    # Remove default handler
    logger.remove()

    if settings.environment == "development":
        format_string = (
            "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{extra[name]}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            "{message}"
        )
    else:
        format_string = "{time} | {level} | {extra[name]}:{function}:{line} | {message}"

    logger.configure(extra={"name": "fourmode"})
    logger.add(
        sys.stderr,
        format=format_string,
        level=level.upper(),
        colorize=settings.environment == "development",
        serialize=settings.environment != "development",
    )

    if settings.environment == "production":
        logger.add(
            "logs/fourmode.log",
            format=format_string,
            level="INFO",
            rotation="10 MB",
            retention="7 days",
            serialize=True,
        )


def get_logger(name: str = "fourmode"):
    """Get a logger instance with the given name."""
    return logger.bind(name=name)


def log_tool_call(
    tool_name: str, inputs: Dict[str, Any], duration_ms: Optional[float] = None
) -> None:
    """Log a tool call with structured data."""
    log_data: Dict[str, Any] = {
        "event": "tool_call",
        "tool_name": tool_name,
        "inputs": inputs,
    }

    if duration_ms is not None:
        log_data["duration_ms"] = round(duration_ms, 3)

    logger.bind(name="tools", **log_data).info(f"Tool call executed: {tool_name}")
