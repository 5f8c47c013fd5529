"""Command-line interface."""

from .commands import CommandOutcome, ExitCode, main

__all__ = [
    "CommandOutcome",
    "ExitCode",
    "main",
]
