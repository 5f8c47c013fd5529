"""Core utilities package."""

from .helpers import read_json, write_json, to_json_text
from .log import configure_logging, get_logger

__all__ = [
    "read_json",
    "write_json",
    "to_json_text",
    "configure_logging",
    "get_logger",
]
