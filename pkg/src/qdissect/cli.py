from __future__ import annotations

import asyncio
import logging
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from qdissect.cache import FileCache
from qdissect.config import Config
from qdissect.models import Claim, ClaimStatus, ProductSpec
from qdissect.output.markdown import render_report, write_report
from qdissect.output.report import (
    emit_report,
    emit_series,
    render_proof,
    render_run,
    render_scan,
    render_series,
)
from qdissect.pipeline import expand_cached, run_catalog, run_scan
from qdissect.spec_parser import SpecSyntaxError, parse_spec
from qdissect.verifier.catalog import builtin_catalog, builtin_families, load_template
from qdissect.verifier.prover import prove_claim
from qdissect.verifier.verify import VerifierError, verify_claim

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_INAPPLICABLE = 3

USAGE_GUIDE = """Usage:
  qdissect COMMAND [OPTIONS]

Examples:
  qdissect expand "(q,q^4;q^5) (q^6,q^9;q^15)^2" --order 50
  qdissect verify "(q,q^4;q^5) (q^6,q^9;q^15)^2" --mod 5 --residue 3
  qdissect prove "(q,q^6;q^7) (-q^9,-q^12;q^21)" --mod 7 --residue 4
  qdissect catalog --json --out claims.md
  qdissect scan --family c --order 500
  qdissect families

Tips:
  - Use --help (or -h) to see all options.
  - Write signs explicitly: (-q^2,-q^3;q^5)^2 rather than a plus-minus.
  - Exit codes: 0 pass, 1 refuted, 2 usage or parse error, 3 prover inapplicable.
  - QDISSECT_ORDER, QDISSECT_CONCURRENCY and QDISSECT_CACHE_DIR may live in .env.
"""

HELP = {"help_option_names": ["--help", "-h"]}


def _show_usage(ctx: click.Context, _param: click.Parameter, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return
    click.echo(USAGE_GUIDE)
    ctx.exit(0)


usage_option = click.option(
    "--usage",
    is_flag=True,
    is_eager=True,
    expose_value=False,
    callback=_show_usage,
    help="Show usage guide and examples.",
)


def common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        usage_option,
        click.option("--order", type=int, default=None, help="Truncation order N."),
        click.option("--json", "json_output", is_flag=True, default=None, help="Emit JSON."),
        click.option("--verbose", is_flag=True, default=None, help="Verbose stderr logs."),
        click.option(
            "--cache-dir",
            type=click.Path(file_okay=False, path_type=Path),
            default=None,
            help="Directory for cached expansions.",
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


progression_options = [
    click.option("--mod", "t", type=int, required=True, help="Progression modulus t."),
    click.option("--residue", "r", type=int, required=True, help="Progression residue r."),
]


def with_progression(func: Callable[..., Any]) -> Callable[..., Any]:
    for option in reversed(progression_options):
        func = option(func)
    return func


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(message)s",
    )


def _build_config(**values: object) -> Config:
    _configure_logging(bool(values.get("verbose")))
    overrides = {key: value for key, value in values.items() if value is not None}
    try:
        return Config(**overrides)
    except ValidationError as exc:
        click.echo(f"configuration error: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_USAGE) from exc


def _parse(text: str) -> ProductSpec:
    try:
        return parse_spec(text)
    except (SpecSyntaxError, ValidationError) as exc:
        click.echo(f"parse error: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_USAGE) from exc


def _claim(text: str, t: int, r: int) -> Claim:
    spec = _parse(text)
    try:
        return Claim(id="command-line", spec=spec, t=t, r=r, source=text)
    except ValidationError as exc:
        click.echo(f"invalid progression: {exc}", err=True)
        raise click.exceptions.Exit(EXIT_USAGE) from exc


@click.group(context_settings=HELP, invoke_without_command=True)
@usage_option
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Expand, verify and certify vanishing coefficients of q-products."""
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command("expand", context_settings=HELP, help="Print the coefficients of a product.")
@click.argument("spec_text", metavar="SPEC")
@common_options
def expand(
    spec_text: str,
    order: int | None,
    json_output: bool | None,
    verbose: bool | None,
    cache_dir: Path | None,
) -> None:
    config = _build_config(
        order=order, json_output=json_output, verbose=verbose, cache_dir=cache_dir
    )
    spec = _parse(spec_text)
    cache = FileCache(config.cache_dir) if config.cache_dir is not None else None
    series = expand_cached(spec, config.order, cache)
    if config.json_output:
        emit_series(series.truncate(config.order))
    else:
        click.echo(render_series(series.truncate(config.order)))


@cli.command("verify", context_settings=HELP, help="Check a progression by brute force.")
@click.argument("spec_text", metavar="SPEC")
@with_progression
@common_options
@click.pass_context
def verify(
    ctx: click.Context,
    spec_text: str,
    t: int,
    r: int,
    order: int | None,
    json_output: bool | None,
    verbose: bool | None,
    cache_dir: Path | None,
) -> None:
    config = _build_config(
        order=order, json_output=json_output, verbose=verbose, cache_dir=cache_dir
    )
    claim = _claim(spec_text, t, r)
    try:
        cache = FileCache(config.cache_dir) if config.cache_dir is not None else None
        report = verify_claim(claim, config.order, expand_cached(claim.spec, config.order, cache))
    except VerifierError as exc:
        click.echo(f"verify error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
    if config.json_output:
        emit_report(report)
    else:
        click.echo(render_proof(report))
    ctx.exit(EXIT_REFUTED if report.status == ClaimStatus.REFUTED else EXIT_OK)


@cli.command("prove", context_settings=HELP, help="Certify a progression by theta dissection.")
@click.argument("spec_text", metavar="SPEC")
@with_progression
@common_options
@click.pass_context
def prove(
    ctx: click.Context,
    spec_text: str,
    t: int,
    r: int,
    order: int | None,
    json_output: bool | None,
    verbose: bool | None,
    cache_dir: Path | None,
) -> None:
    config = _build_config(
        order=order, json_output=json_output, verbose=verbose, cache_dir=cache_dir
    )
    claim = _claim(spec_text, t, r)
    try:
        report = prove_claim(claim, config.order)
    except VerifierError as exc:
        click.echo(f"prove error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
    if config.json_output:
        emit_report(report)
    else:
        click.echo(render_proof(report))
    codes = {ClaimStatus.REFUTED: EXIT_REFUTED, ClaimStatus.INAPPLICABLE: EXIT_INAPPLICABLE}
    ctx.exit(codes.get(report.status, EXIT_OK))


@cli.command("catalog", context_settings=HELP, help="Run every built-in claim.")
@common_options
@click.option("--concurrency", type=int, default=None, help="Concurrent claims.")
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a Markdown report to this path.",
)
@click.option("--no-prove", "no_prove", is_flag=True, default=False, help="Brute force only.")
@click.pass_context
def catalog(
    ctx: click.Context,
    order: int | None,
    json_output: bool | None,
    verbose: bool | None,
    cache_dir: Path | None,
    concurrency: int | None,
    out: Path | None,
    no_prove: bool,
) -> None:
    config = _build_config(
        order=order,
        json_output=json_output,
        verbose=verbose,
        cache_dir=cache_dir,
        concurrency=concurrency,
        out=out,
        prove=False if no_prove else None,
    )
    claims = builtin_catalog()
    report = asyncio.run(run_catalog(config, claims))
    if config.json_output:
        emit_report(report)
    else:
        click.echo(render_run(report))
    if config.out is not None:
        target = write_report(render_report(report, claims), config.out)
        logging.getLogger(__name__).info("wrote %s", target)
    ctx.exit(EXIT_REFUTED if report.summary.refuted else EXIT_OK)


@cli.command("scan", context_settings=HELP, help="Search a product family for vanishing.")
@click.option("--family", required=True, help="Built-in family name or template JSON file.")
@click.option("--mod", "t", type=int, default=None, help="Override the family modulus.")
@common_options
@click.option("--concurrency", type=int, default=None, help="Concurrent instantiations.")
@click.option("--no-prove", "no_prove", is_flag=True, default=False, help="Skip certification.")
@click.pass_context
def scan(
    ctx: click.Context,
    family: str,
    t: int | None,
    order: int | None,
    json_output: bool | None,
    verbose: bool | None,
    cache_dir: Path | None,
    concurrency: int | None,
    no_prove: bool,
) -> None:
    config = _build_config(
        scan_order=order,
        json_output=json_output,
        verbose=verbose,
        cache_dir=cache_dir,
        concurrency=concurrency,
        prove=False if no_prove else None,
    )
    if t is not None and t < 2:
        click.echo("scan modulus must be >= 2", err=True)
        ctx.exit(EXIT_USAGE)
    try:
        template = load_template(family)
    except (VerifierError, ValidationError, OSError) as exc:
        click.echo(f"family error: {exc}", err=True)
        ctx.exit(EXIT_USAGE)
    report = asyncio.run(run_scan(config, template, t))
    if config.json_output:
        emit_report(report)
    else:
        click.echo(render_scan(report))
    ctx.exit(EXIT_OK)


@cli.command("families", context_settings=HELP, help="List the built-in scan families.")
@usage_option
def families() -> None:
    for name, template in builtin_families().items():
        click.echo(f"{name:<13} mod {template.t:<2} {template.description}")


def main() -> int:
    try:
        code = cli.main(standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        click.echo(f"fatal error: {exc}", err=True)
        return EXIT_USAGE
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
