# Standard library:
from __future__ import annotations
import logging

# Third party:
from rich.console import Console
from rich.logging import RichHandler


PACKAGE_LOGGER = "rbf_fock"

# stdout carries JSON and CSV, so everything human-facing goes to stderr
stderr_console = Console(stderr=True)


def level_for(verbosity: int) -> int:
    """0 -> WARNING, 1 -> INFO, 2 or more -> DEBUG."""
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    return logging.WARNING


def setup_logging(verbosity: int = 0) -> logging.Logger:
    """
    Install a single RichHandler on the package logger.

    Safe to call more than once; earlier handlers are replaced.
    """
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = RichHandler(console=stderr_console, show_path=verbosity >= 2, rich_tracebacks=True)
    handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
    logger.addHandler(handler)
    logger.setLevel(level_for(verbosity))
    logger.propagate = False
    return logger
