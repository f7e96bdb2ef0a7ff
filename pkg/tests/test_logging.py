"""Tests for lmpsquare.logging module."""

from __future__ import annotations

import logging

from rich.logging import RichHandler

from lmpsquare.logging import configure_logging, logger


class TestConfigureLogging:
    def test_levels(self) -> None:
        configure_logging(verbose=True)
        assert logger.level == logging.DEBUG
        configure_logging(verbose=False)
        assert logger.level == logging.WARNING

    def test_single_handler(self) -> None:
        configure_logging()
        configure_logging()
        assert sum(isinstance(h, RichHandler) for h in logger.handlers) == 1
