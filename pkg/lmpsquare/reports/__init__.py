"""
lmpsquare.reports - Plain-text reports rendered from Jinja2 templates.
"""

from __future__ import annotations

from lmpsquare.reports.templates import (
    ReportRenderer,
    render_certificate,
    render_obstruction,
    render_validation,
)

__all__ = ["ReportRenderer", "render_certificate", "render_obstruction", "render_validation"]
