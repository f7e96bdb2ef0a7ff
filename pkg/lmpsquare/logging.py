"""
lmpsquare.logging - Package logger and its console handler.

Pipeline stages log simplex pivots, refinement rounds and per-state
extension steps at DEBUG; --verbose makes them visible on stderr.
"""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

logger = logging.getLogger("lmpsquare")


def configure_logging(verbose: bool = False) -> None:
    """Attach a single stderr handler to the lmpsquare logger.

    Args:
        verbose: DEBUG level when True, WARNING otherwise
    """
    for handler in [h for h in logger.handlers if isinstance(h, RichHandler)]:
        logger.removeHandler(handler)
    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
