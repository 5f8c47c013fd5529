"""
Logging setup: bracket-tagged records on stderr, one logger per concern.
"""

import logging
import sys
from typing import Optional

from core.config import settings

_configured = False


class _TagFormatter(logging.Formatter):
    """Exposes the last component of the logger name as %(tag)s."""

    def format(self, record: logging.LogRecord) -> str:
        record.tag = record.name.rsplit(".", 1)[-1]
        return super().format(record)


def configure_logging(level: Optional[str] = None) -> None:
    """Install the stderr handler once; later calls only adjust the level."""
    global _configured
    root = logging.getLogger("subn")
    root.setLevel((level or settings.log_level).upper())
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(_TagFormatter(settings.log_format))
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def get_logger(tag: str) -> logging.Logger:
    """
    Logger whose records render as "[TAG] message".
    Tags are short upper-case concern names: QUOTIENT, SNF, TIETZE, KNOT, REPORT.
    """
    return logging.getLogger(f"subn.{tag}")
