#!/usr/bin/env python3
"""Versevar CLI - variability of alliterative verse from the command line.

Usage:
    versevar code <poem>                 Position strings, one per line
    versevar distmat <codes>             Pairwise edit distance matrix (CSV)
    versevar frechet <codes>             Generalized mean and variance
    versevar ftest-lines <a> <b>         Permutation test on two code lists
    versevar ftest-counts <a> <b>        Permutation test on two meter count tables
    versevar render-heatmap <matrix>     Matrix as a PGM image
    versevar render-hist <values>        Histogram of resampled ratios
    versevar fixtures [name]             List or print shipped fixtures

Sources are file paths or ``fixture:<name>``. Exit codes: 0 success,
1 usage error, 2 data error.
"""

import json
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import click

from shared.schemas import (
    CodingVariant,
    CountTable,
    DistanceMatrix,
    FixtureKind,
    PermTestResult,
    Tail,
    Weighting,
)
from versevar.coding import code_poem, is_annotated, load_lexicon
from versevar.core import (
    Settings,
    configure_logging,
    counts_permutation_test,
    distance_matrix,
    frechet_summary,
    get_settings,
    line_permutation_test,
    row_profile,
    weighted_frechet,
)
from versevar.corpus import default_registry, ingest_poem, read_codes, read_counts
from versevar.viz import (
    format_perm_result,
    format_summary,
    heatmap_pgm,
    histogram,
    histogram_csv,
    histogram_svg,
    parse_values,
    perm_report,
    profile_report,
    summary_report,
)

EXIT_USAGE = 1
EXIT_DATA = 2

FIXTURE_PREFIX = "fixture:"

TAILS = {"two": Tail.TWO_TAILED_RECIPROCAL, "greater": Tail.ONE_SIDED_GREATER}
WEIGHTINGS = {"paper": Weighting.PAPER_DC_SQUARED, "conventional": Weighting.CONVENTIONAL}

SEED = click.IntRange(0, 2**64 - 1)


class VersevarGroup(click.Group):
    """Group that reports usage errors with exit code 1."""

    def main(self, *args: Any, **kwargs: Any) -> Any:
        kwargs.pop("standalone_mode", None)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.ClickException as e:
            e.show()
            sys.exit(e.exit_code)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        sys.exit(rv if isinstance(rv, int) else 0)


@contextmanager
def data_errors() -> Iterator[None]:
    """Turn bad input into ``Error: ...`` on stderr and exit code 2."""
    try:
        yield
    except (ValueError, OSError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_DATA)


def settings_of(ctx: click.Context) -> Settings:
    settings: Settings = ctx.obj["settings"]
    return settings


def fixture_name(source: str) -> str | None:
    if source.startswith(FIXTURE_PREFIX):
        return source[len(FIXTURE_PREFIX):]
    return None


def load_lines(source: str) -> list[str]:
    """Poem lines from a fixture or a poem file."""
    name = fixture_name(source)
    if name is not None:
        return default_registry().items(name)
    return ingest_poem(Path(source)).lines


def load_items(source: str) -> list[str]:
    """Symbol strings (codes, patterns) from a fixture or a one-per-line file."""
    name = fixture_name(source)
    if name is not None:
        return default_registry().items(name)
    return read_codes(Path(source))


def load_matrix(source: str) -> DistanceMatrix:
    name = fixture_name(source)
    if name is not None:
        payload = default_registry().get(name).payload
        if not isinstance(payload, DistanceMatrix):
            raise ValueError(f"fixture {name!r} is not a matrix")
        return payload
    return DistanceMatrix.from_csv(Path(source).read_text(encoding="utf-8"))


def load_counts(source: str) -> CountTable:
    name = fixture_name(source)
    if name is not None:
        payload = default_registry().get(name).payload
        if not isinstance(payload, CountTable):
            raise ValueError(f"fixture {name!r} is not a count table")
        return payload
    return read_counts(Path(source))


def pattern_matrix(patterns: list[str], matrix_source: str | None, workers: int) -> DistanceMatrix:
    """Distances between patterns, read from ``matrix_source`` or computed."""
    if matrix_source is None:
        return distance_matrix(patterns, labels=patterns, workers=workers)
    matrix = load_matrix(matrix_source)
    if matrix.labels is None:
        return DistanceMatrix(entries=matrix.entries, labels=tuple(patterns))
    return matrix


def parse_range(text: str) -> tuple[int, int]:
    """``FIRST-LAST`` or a single line number."""
    first, _, last = text.partition("-")
    try:
        lo, hi = int(first), int(last or first)
    except ValueError:
        raise click.BadParameter(f"expected FIRST-LAST, got {text!r}", param_hint="--skip")
    if lo < 1 or hi < lo:
        raise click.BadParameter(f"empty range {text!r}", param_hint="--skip")
    return lo, hi


def emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def emit_perm_result(result: PermTestResult, as_json: bool, out: str | None, record: str | None) -> None:
    if as_json:
        click.echo(json.dumps(format_perm_result(result), allow_nan=False))
    else:
        click.echo(perm_report(result), nl=False)
    if out is not None:
        Path(out).write_text(result.ratios_csv(), encoding="utf-8")
    if record is not None:
        Path(record).write_bytes(result.to_msgpack())


@click.group(cls=VersevarGroup)
@click.option("--log-level", "-l", default=None, help="Log level (default from settings)")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None) -> None:
    """Versevar - generalized variances of coded verse lines."""
    ctx.ensure_object(dict)
    with data_errors():
        settings = get_settings()
    if log_level is not None:
        settings = settings.model_copy(update={"log_level": log_level})
    configure_logging(settings)
    ctx.obj["settings"] = settings


@cli.command()
@click.argument("source")
@click.option("--variant", type=click.Choice(["A", "B"]), default=None, help="Coding variant")
@click.option(
    "--skip", "skips", multiple=True, help="Drop file lines FIRST-LAST (1-based, inclusive)"
)
@click.option("--first", "keep_first", type=click.IntRange(min=1), default=None, help="Keep only the first N lines")
@click.option(
    "--annotated/--auto",
    "annotated",
    default=None,
    help="Read asterisk marks or auto-code every line (default: annotated if any line has a mark)",
)
@click.pass_context
def code(
    ctx: click.Context,
    source: str,
    variant: str | None,
    skips: tuple[str, ...],
    keep_first: int | None,
    annotated: bool | None,
) -> None:
    """Code a poem as alliteration position strings."""
    settings = settings_of(ctx)
    chosen = CodingVariant(variant or settings.variant)
    ranges = [parse_range(s) for s in skips]

    with data_errors():
        if fixture_name(source) is None:
            lines = ingest_poem(Path(source), skip_ranges=ranges, keep_first=keep_first).lines
        else:
            lines = load_lines(source)
        if annotated is None:
            annotated = any(is_annotated(line) for line in lines)
        codes = code_poem(
            lines,
            chosen,
            annotated=annotated,
            lexicon=load_lexicon(settings),
            a_verse_max_staves=settings.a_verse_max_staves,
            min_prefix_stem=settings.min_prefix_stem,
        )

    if not annotated and codes:
        click.echo(f"note: {len(codes)} line(s) auto-coded (best effort, variant {chosen.value})", err=True)
    for position_string in codes:
        click.echo(position_string.bits)


@cli.command()
@click.argument("source")
@click.option("--out", "-o", default=None, help="Write the matrix CSV here")
@click.option("--profile", is_flag=True, help="Print rows by mean distance")
@click.option("--workers", "-w", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.pass_context
def distmat(
    ctx: click.Context, source: str, out: str | None, profile: bool, workers: int | None
) -> None:
    """Pairwise edit distances between the items of SOURCE."""
    settings = settings_of(ctx)
    with data_errors():
        name = fixture_name(source)
        if name is not None and default_registry().get(name).kind == FixtureKind.MATRIX:
            matrix = load_matrix(source)
        else:
            items = load_items(source)
            matrix = distance_matrix(items, workers=workers or settings.workers)

    emit(matrix.to_csv(), out)
    if profile:
        row_means, overall = row_profile(matrix)
        click.echo(profile_report(matrix, row_means, overall), nl=False)


@cli.command()
@click.argument("source")
@click.option(
    "--input",
    "input_kind",
    type=click.Choice(["codes", "matrix", "counts"]),
    default=None,
    help="What a file SOURCE holds (fixtures know their kind)",
)
@click.option("--matrix", "matrix_source", default=None, help="Pattern distances for --input counts")
@click.option("--power", "-p", type=click.IntRange(min=1), default=None, help="Distance exponent")
@click.option("--weighting", type=click.Choice(list(WEIGHTINGS)), default=None, help="Count weighting")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON record")
@click.pass_context
def frechet(
    ctx: click.Context,
    source: str,
    input_kind: str | None,
    matrix_source: str | None,
    power: int | None,
    weighting: str | None,
    as_json: bool,
) -> None:
    """Generalized mean and variance of SOURCE."""
    settings = settings_of(ctx)
    p = power or settings.power
    with data_errors():
        name = fixture_name(source)
        if name is not None:
            input_kind = default_registry().get(name).kind.value
        kind = input_kind or "codes"

        if kind == FixtureKind.COUNTS.value:
            table = load_counts(source)
            matrix = pattern_matrix(table.patterns, matrix_source, settings.workers)
            summary = weighted_frechet(
                matrix,
                table.aligned(list(matrix.labels or table.patterns)),
                power=p,
                weighting=WEIGHTINGS[weighting or settings.weighting],
            )
        elif kind == FixtureKind.MATRIX.value:
            summary = frechet_summary(load_matrix(source), power=p)
        else:
            items = load_items(source)
            summary = frechet_summary(distance_matrix(items, workers=settings.workers), power=p)

    if as_json:
        click.echo(json.dumps(format_summary(summary)))
    else:
        click.echo(summary_report(summary), nl=False)


def _perm_options(default_tail: str) -> Any:
    def decorate(f: Any) -> Any:
        options = [
            click.option("--seed", "-s", type=SEED, required=True, help="Unsigned 64-bit seed"),
            click.option("--resamples", "-n", type=click.IntRange(min=1), default=None, help="Number of resamples"),
            click.option("--power", "-p", type=click.IntRange(min=1), default=None, help="Distance exponent"),
            click.option("--tail", type=click.Choice(list(TAILS)), default=default_tail, show_default=True),
            click.option("--corrected", is_flag=True, help="Report (b+1)/(n+1)"),
            click.option("--workers", "-w", type=click.IntRange(min=1), default=None, help="Worker processes"),
            click.option("--out", "-o", default=None, help="Write resample ratios (CSV) here"),
            click.option("--record", default=None, help="Write the full result (msgpack) here"),
            click.option("--json", "as_json", is_flag=True, help="Print a JSON record"),
        ]
        for option in reversed(options):
            f = option(f)
        return f

    return decorate


@cli.command("ftest-lines")
@click.argument("source_a")
@click.argument("source_b")
@_perm_options("two")
@click.pass_context
def ftest_lines(
    ctx: click.Context,
    source_a: str,
    source_b: str,
    seed: int,
    resamples: int | None,
    power: int | None,
    tail: str,
    corrected: bool,
    workers: int | None,
    out: str | None,
    record: str | None,
    as_json: bool,
) -> None:
    """Test whether two code lists differ in variability (ratio B over A)."""
    settings = settings_of(ctx)
    with data_errors():
        result = line_permutation_test(
            load_items(source_a),
            load_items(source_b),
            n_resamples=resamples or settings.n_resamples,
            seed=seed,
            power=power or settings.power,
            tail=TAILS[tail],
            corrected=corrected or settings.p_value_correction,
            workers=workers or settings.workers,
        )
        emit_perm_result(result, as_json, out, record)


@cli.command("ftest-counts")
@click.argument("source_a")
@click.argument("source_b")
@click.option("--matrix", "matrix_source", default=None, help="Distances over the combined patterns")
@click.option("--weighting", type=click.Choice(list(WEIGHTINGS)), default=None, help="Count weighting")
@_perm_options("greater")
@click.pass_context
def ftest_counts(
    ctx: click.Context,
    source_a: str,
    source_b: str,
    matrix_source: str | None,
    weighting: str | None,
    seed: int,
    resamples: int | None,
    power: int | None,
    tail: str,
    corrected: bool,
    workers: int | None,
    out: str | None,
    record: str | None,
    as_json: bool,
) -> None:
    """Test whether two meter count tables differ in variability (ratio B over A)."""
    settings = settings_of(ctx)
    with data_errors():
        counts_a, counts_b = load_counts(source_a), load_counts(source_b)
        patterns = list(dict.fromkeys(counts_a.patterns + counts_b.patterns))
        matrix = pattern_matrix(patterns, matrix_source, settings.workers)
        result = counts_permutation_test(
            counts_a,
            counts_b,
            matrix,
            n_resamples=resamples or settings.n_resamples,
            seed=seed,
            power=power or settings.power,
            weighting=WEIGHTINGS[weighting or settings.weighting],
            tail=TAILS[tail],
            corrected=corrected or settings.p_value_correction,
            workers=workers or settings.workers,
        )
        emit_perm_result(result, as_json, out, record)


@cli.command("render-heatmap")
@click.argument("source")
@click.option("--out", "-o", default=None, help="Write the PGM image here")
def render_heatmap(source: str, out: str | None) -> None:
    """Render a distance matrix as a grayscale PGM (white = 0)."""
    with data_errors():
        emit(heatmap_pgm(load_matrix(source)), out)


@cli.command("render-hist")
@click.argument("source")
@click.option("--bins", "-b", type=click.IntRange(min=1), default=None, help="Number of bins")
@click.option("--out", "-o", default=None, help="Write the bin CSV here")
@click.option("--svg", "svg_path", default=None, help="Also write an SVG bar chart here")
@click.pass_context
def render_hist(ctx: click.Context, source: str, bins: int | None, out: str | None, svg_path: str | None) -> None:
    """Histogram of a one-value-per-line file (e.g. resample ratios)."""
    settings = settings_of(ctx)
    with data_errors():
        values = parse_values(Path(source).read_text(encoding="utf-8"), source)
        table = histogram(values, bins or settings.histogram_bins)
        emit(histogram_csv(table), out)
        if svg_path is not None:
            Path(svg_path).write_text(histogram_svg(table, title=Path(source).name), encoding="utf-8")


@cli.command()
@click.argument("name", required=False)
def fixtures(name: str | None) -> None:
    """List shipped fixtures, or print one."""
    registry = default_registry()
    if name is None:
        for fixture_id in registry.names():
            click.echo(f"{fixture_id:<26} {registry.provenance(fixture_id)}")
        return

    with data_errors():
        payload = registry.get(name).payload
    if isinstance(payload, DistanceMatrix):
        click.echo(payload.to_csv(), nl=False)
    elif isinstance(payload, CountTable):
        for row in payload.rows:
            click.echo(f"{row.pattern}\t{row.count}")
    else:
        for item in payload:
            click.echo(item)


def main() -> None:
    """Entry point."""
    cli()


if __name__ == "__main__":
    main()
