"""
lmpsquare.reports.templates - Plain-text reports from the Jinja2 templates in
lmpsquare/templates/.

Templates render with StrictUndefined, so a report that references a key its
to_dict() does not provide fails instead of printing blanks.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader, StrictUndefined, Template, TemplateNotFound

TEMPLATES_DIR = Path(__file__).parent.parent / "templates"


class ReportRenderer:
    """Loads report templates once and renders them from plain dicts."""

    def __init__(self, templates_dir: Path = TEMPLATES_DIR) -> None:
        self.templates_dir = templates_dir
        self.env = Environment(
            loader=FileSystemLoader(str(templates_dir)),
            undefined=StrictUndefined,
            autoescape=False,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self._cache: dict[str, Template] = {}

    def get_template(self, name: str) -> Template:
        """Template by file name, e.g. "certificate.txt".

        Raises:
            FileNotFoundError: If templates_dir has no such file
        """
        if name not in self._cache:
            try:
                self._cache[name] = self.env.get_template(name)
            except TemplateNotFound:
                raise FileNotFoundError(
                    f"Template not found: {self.templates_dir / name}"
                ) from None
        return self._cache[name]

    def render(self, template_name: str, variables: dict[str, Any]) -> str:
        return self.get_template(template_name).render(**variables)


def render_obstruction(report: Any, renderer: ReportRenderer | None = None) -> str:
    """Numbered derivation steps of an ObstructionReport and the clash they force."""
    return (renderer or ReportRenderer()).render("obstruction.txt", report.to_dict())


def render_validation(report: Any, renderer: ReportRenderer | None = None) -> str:
    return (renderer or ReportRenderer()).render("validation.txt", report.to_dict())


def render_certificate(
    result: Any,
    failures: list[str] | None = None,
    renderer: ReportRenderer | None = None,
) -> str:
    """Pullback states and per-row extension summary of a SemipullbackResult.

    Pass failures (from result.check()) to append a PASS/FAIL verdict; None
    leaves it out.
    """
    variables = result.to_dict()
    variables["states"] = len(result.pullback_states)
    variables["failures"] = failures
    return (renderer or ReportRenderer()).render("certificate.txt", variables)
