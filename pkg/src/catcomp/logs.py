"""JSON-structured logging for catcomp modules."""

from __future__ import annotations

import logging
import sys

from pythonjsonlogger.json import JsonFormatter

_ROOT_LOGGER = "catcomp"
_configured = False


def configure_logging(level: str = "WARNING") -> None:
    """Attach one JSON stderr handler to the package logger (idempotent)."""
    global _configured
    root = logging.getLogger(_ROOT_LOGGER)
    root.setLevel(level.upper())
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        JsonFormatter(
            "{asctime}{levelname}{name}{message}",
            style="{",
            rename_fields={"levelname": "level", "asctime": "ts"},
        )
    )
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    if not name.startswith(_ROOT_LOGGER):
        name = f"{_ROOT_LOGGER}.{name}"
    return logging.getLogger(name)
