"""
lmpsquare.cli - Typer CLI entry point.

Exit codes: 0 on success or PASS, 1 on a semantic failure (invalid model,
failed check, no behavioral equivalence, pipeline error), 2 on a schema,
parse or config error.
"""

from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import NoReturn

import typer
from rich.console import Console

from lmpsquare import __version__
from lmpsquare.config import (
    CONFIG_FILENAME,
    SquareConfig,
    create_default_config,
    load_config,
    write_config,
)
from lmpsquare.exceptions import ConfigError, SchemaError, SquareError
from lmpsquare.io import certificate_path, dumps_canonical, write_json, write_text
from lmpsquare.model.kernels import KernelKind
from lmpsquare.utils import parse_rational

app = typer.Typer(
    name="lmpsquare",
    help="Semipullbacks of finite labelled Markov processes.\n\n"
    "Completes cospans of kernels and LMPs to commutative squares with exact "
    "rational arithmetic, and turns behavioral equivalence into bisimilarity.",
    add_completion=False,
)
console = Console()


class Mode(str, Enum):
    kernel = "kernel"
    lmp = "lmp"


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


def version_callback(value: bool) -> None:
    if value:
        console.print(f"lmpsquare {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-V",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        help="Enable debug logging",
    ),
    config: Path | None = typer.Option(
        None,
        "--config",
        "-c",
        help=f"Config file, or a directory containing {CONFIG_FILENAME}",
    ),
) -> None:
    """lmpsquare - semipullbacks of finite labelled Markov processes."""
    from lmpsquare.logging import configure_logging

    configure_logging(verbose)
    ctx.obj = {"config_path": config}


def _fail(e: SquareError) -> NoReturn:
    console.print(f"[red]Error: {e}[/red]", highlight=False)
    code = 2 if isinstance(e, SchemaError | ConfigError) else 1
    raise typer.Exit(code)


def _config(ctx: typer.Context) -> SquareConfig:
    path = (ctx.obj or {}).get("config_path")
    try:
        return load_config(path)
    except ConfigError as e:
        _fail(e)


@app.command("validate")
def validate(
    file: Path = typer.Argument(..., help="Model file (JSON)"),
    output_format: OutputFormat = typer.Option(
        OutputFormat.text, "--format", "-f", help="Report format"
    ),
) -> None:
    """Run every validator on a model file.

    Checks kernel entries and row sums, LMP kernels, and the morphism
    condition of every cospan leg.
    """
    from lmpsquare.modelfile import load_model
    from lmpsquare.reports import render_validation

    try:
        report = load_model(file).validate()
    except SquareError as e:
        _fail(e)
    report.subject = file.name
    if output_format is OutputFormat.json:
        typer.echo(dumps_canonical(report.to_dict()), nl=False)
    else:
        typer.echo(render_validation(report), nl=False)
    raise typer.Exit(0 if report.valid else 1)


@app.command("semipullback")
def semipullback(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Model file (JSON)"),
    cospan_name: str = typer.Argument(..., help="Name of the cospan in the model file"),
    mode: Mode | None = typer.Option(
        None, "--mode", "-m", help="kernel or lmp (inferred from the apex by default)"
    ),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the result model here"),
    certificate: Path | None = typer.Option(
        None, "--certificate", help="Certificate path (default: next to --out)"
    ),
    check: bool = typer.Option(
        False, "--check", help="Re-verify marginals and commutativity, report PASS/FAIL"
    ),
) -> None:
    """Complete a cospan to a commutative square."""
    from lmpsquare.modelfile import dump_model, load_model, result_to_model
    from lmpsquare.reports import render_certificate
    from lmpsquare.semipullback import (
        LMPCospan,
        semipullback_lmp,
        semipullback_prob_kernels,
        semipullback_subprob_kernels,
    )

    config = _config(ctx)
    try:
        cospan = load_model(file).resolve_cospan(cospan_name, mode.value if mode else None)
        if isinstance(cospan, LMPCospan):
            result = semipullback_lmp(cospan, config)
        elif all(
            k.kind is KernelKind.PROBABILITY for k in (cospan.apex, cospan.left, cospan.right)
        ):
            result = semipullback_prob_kernels(cospan, config)
        else:
            result = semipullback_subprob_kernels(cospan, config)
        text = dump_model(result_to_model(result), indent=config.indent)
    except SquareError as e:
        _fail(e)

    if out is not None:
        write_text(out, text)
        certificate = certificate or certificate_path(out)
        console.print(f"[green]✓[/green] Wrote {out}")
    elif not check:
        typer.echo(text, nl=False)
    if certificate is not None:
        write_json(certificate, result.to_dict(), indent=config.indent)
        console.print(f"[dim]  Certificate: {certificate}[/dim]")

    if check:
        failures = list(result.check().failures)
        typer.echo(render_certificate(result, failures), nl=False)
        raise typer.Exit(0 if not failures else 1)


@app.command("quotient")
def quotient(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Model file (JSON)"),
    lmp_name: str = typer.Argument(..., help="Name of the LMP to quotient"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the quotient model here"),
) -> None:
    """Largest zigzag quotient of an LMP."""
    from lmpsquare.bisim import largest_zigzag_quotient
    from lmpsquare.modelfile import dump_model, load_model, quotient_to_model

    config = _config(ctx)
    try:
        lmp = load_model(file).lmp(lmp_name)
        u, q = largest_zigzag_quotient(lmp)
        text = dump_model(quotient_to_model(lmp, u, q), indent=config.indent)
    except SquareError as e:
        _fail(e)
    if out is not None:
        write_text(out, text)
        console.print(
            f"[green]✓[/green] {lmp_name}: {len(lmp.space)} states -> {len(u.space)} blocks"
        )
    else:
        typer.echo(text, nl=False)


@app.command("span-from-cospan")
def span_from_cospan_cmd(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Model file (JSON)"),
    first: str = typer.Argument(..., help="First LMP"),
    second: str = typer.Argument(..., help="Second LMP"),
    out: Path | None = typer.Option(None, "--out", "-o", help="Write the span model here"),
) -> None:
    """Bisimilarity span from the behavioral-equivalence cospan of two LMPs."""
    from lmpsquare.bisim import cospan_from_quotients, span_from_cospan
    from lmpsquare.modelfile import dump_model, load_model, result_to_model
    from lmpsquare.reports import render_certificate

    config = _config(ctx)
    try:
        model = load_model(file)
        cospan = cospan_from_quotients(model.lmp(first), model.lmp(second))
        if cospan is None:
            console.print(f"{first} and {second} are not behaviorally equivalent")
            raise typer.Exit(1)
        result = span_from_cospan(cospan, config)
        if out is not None:
            write_text(out, dump_model(result_to_model(result), indent=config.indent))
    except SquareError as e:
        _fail(e)
    failures = list(result.check().failures)
    typer.echo(render_certificate(result, failures), nl=False)
    raise typer.Exit(0 if not failures else 1)


@app.command("counterexample")
def counterexample(
    r1: str = typer.Option("1/3", "--r1", help="Mass of V under the first extension"),
    r2: str = typer.Option("2/3", "--r2", help="Mass of V under the second extension"),
    output_format: OutputFormat = typer.Option(
        OutputFormat.text, "--format", "-f", help="Report format"
    ),
    additivity: bool = typer.Option(
        False, "--additivity", help="Also check finite additivity of both extensions"
    ),
) -> None:
    """Show why the identity cospan on the countable-cocountable algebra has no square."""
    from lmpsquare.counterexample import demonstrate_obstruction, verify_finite_additivity
    from lmpsquare.exceptions import ParamError
    from lmpsquare.reports import render_obstruction

    try:
        try:
            p1, p2 = parse_rational(r1), parse_rational(r2)
        except ValueError as e:
            raise ParamError(str(e)) from e
        report = demonstrate_obstruction(p1, p2)
        checks = [verify_finite_additivity(p) for p in (p1, p2)] if additivity else []
    except SquareError as e:
        _fail(e)

    ok = report.holds and all(c.valid for c in checks)
    if output_format is OutputFormat.json:
        data = report.to_dict()
        if checks:
            data["additivity"] = [c.to_dict() for c in checks]
        typer.echo(dumps_canonical(data), nl=False)
    else:
        typer.echo(render_obstruction(report), nl=False)
        for c in checks:
            status = "ok" if c.valid else f"{len(c.failures)} failure(s)"
            typer.echo(f"Finite additivity for r = {r1 if c.r == p1 else r2}: {status}")
    raise typer.Exit(0 if ok else 1)


@app.command("init-config")
def init_config(
    path: Path = typer.Argument(Path("."), help="Directory to write the config into"),
    profile: str = typer.Option("strict", "--profile", "-p", help="Profile: strict or fast"),
    force: bool = typer.Option(False, "--force", help="Overwrite an existing config"),
) -> None:
    """Write a default lmpsquare.yaml."""
    config_path = path / CONFIG_FILENAME
    if config_path.exists() and not force:
        console.print(f"[red]Error: {config_path} already exists (use --force)[/red]")
        raise typer.Exit(1)
    try:
        config = create_default_config(profile)
    except ConfigError as e:
        _fail(e)
    write_config(config, config_path)
    console.print(f"[green]✓[/green] Wrote {config_path} with profile '{profile}'")


if __name__ == "__main__":
    app()
