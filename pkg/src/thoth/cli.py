"""Command-line interface.

Exit codes are a stable contract: 0 success, 1 I/O failure, 2 validation
failure, 3 negative lexicon check. ``--json`` output is byte-identical to
the corresponding service response body.
"""

from __future__ import annotations

import os
import sys
from pathlib import Path

import click

from .errors import EncodingError, InsufficientTextError, ProfileError
from .familiarity import DALE_CHALL, LEXICON_NAMES, builtin_lexicon, familiar_base
from .ingest import decode_utf8, normalize_word, tokenize
from .readability import Metric, analyze, report_json
from .scheduler import ReaderProfile, build_schedule, schedule_json

EXIT_IO = 1
EXIT_VALIDATION = 2
EXIT_UNFAMILIAR = 3

METRIC_LABELS = {
    Metric.ARI: "Automated Readability Index",
    Metric.FLESCH_READING_EASE: "Flesch Reading Ease",
    Metric.FLESCH_KINCAID_GRADE: "Flesch-Kincaid Grade",
    Metric.GUNNING_FOG: "Gunning Fog",
    Metric.SMOG: "SMOG",
    Metric.COLEMAN_LIAU: "Coleman-Liau",
    Metric.DALE_CHALL: "Dale-Chall",
    Metric.SPACHE: "Spache",
}


def _read_input(path: str) -> str:
    try:
        if path == "-":
            return decode_utf8(sys.stdin.buffer.read())
        return decode_utf8(Path(path).read_bytes())
    except EncodingError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(EXIT_IO)


@click.group()
def main():
    """Readability-driven RSVP scheduling."""


@main.command(name="analyze")
@click.argument("path")
@click.option("--lexicon", default=DALE_CHALL, type=click.Choice(LEXICON_NAMES),
              help="Word list used for the difficult-word fraction.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
def analyze_cmd(path: str, lexicon: str, as_json: bool):
    """Analyze a text file (or - for stdin) and report readability."""
    text = _read_input(path)
    try:
        report = analyze(tokenize(text), builtin_lexicon(lexicon))
    except InsufficientTextError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    if as_json:
        sys.stdout.write(report_json(report))
        return
    click.echo(f"{'metric':<28} {'raw':>10} {'grade':>7}  reliable")
    for s in report.scores:
        click.echo(f"{METRIC_LABELS[s.metric]:<28} {s.raw_score:>10.3f} "
                   f"{s.grade_level:>7.2f}  {'yes' if s.reliable else 'no'}")
    click.echo(f"\nconsensus grade: {report.consensus_grade:.2f}")
    click.echo(f"estimated reader age: {report.estimated_age:.1f}")
    click.echo(f"difficult words: {report.difficult_word_fraction:.1%}")


@main.command()
@click.argument("path")
@click.option("--wpm", default=300.0, show_default=True, help="Base words per minute.")
@click.option("--age", default=None, type=float, help="Reader age in years.")
@click.option("--multiplier", default=1.5, show_default=True,
              help="Display-time multiplier for unfamiliar words.")
@click.option("--lexicon", default=DALE_CHALL, type=click.Choice(LEXICON_NAMES))
@click.option("--no-length", is_flag=True, help="Disable the long-word modifier.")
@click.option("--no-punct", is_flag=True, help="Disable punctuation pauses.")
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False),
              help="Write the schedule JSON to a file instead of stdout.")
def schedule(path: str, wpm: float, age: float | None, multiplier: float,
             lexicon: str, no_length: bool, no_punct: bool, output: str | None):
    """Build the display schedule for a text file (or - for stdin)."""
    text = _read_input(path)
    try:
        profile = ReaderProfile(
            base_wpm=wpm,
            reader_age=age,
            unfamiliar_multiplier=multiplier,
            lexicon=lexicon,
            length_modifier_enabled=not no_length,
            punctuation_pauses_enabled=not no_punct,
        )
        doc = tokenize(text)
        lex = builtin_lexicon(lexicon)
        report = analyze(doc, lex) if age is not None else None
        result = schedule_json(build_schedule(doc, report, profile, lex))
    except (ProfileError, InsufficientTextError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    if output:
        Path(output).write_text(result, encoding="utf-8")
    else:
        sys.stdout.write(result)


@main.group()
def lexicon():
    """Inspect the familiarity lexicons."""


@lexicon.command()
@click.argument("word")
@click.option("--lexicon", "lexicon_name", default=DALE_CHALL, type=click.Choice(LEXICON_NAMES))
def check(word: str, lexicon_name: str):
    """Report whether WORD is familiar; exit 3 when it is not."""
    base = familiar_base(builtin_lexicon(lexicon_name), normalize_word(word))
    if base is None:
        click.echo("unfamiliar")
        sys.exit(EXIT_UNFAMILIAR)
    click.echo(f"familiar (matches {base!r})")


@main.command()
@click.option("--port", default=None, type=int,
              help="Port to bind; defaults to $THOTH_PORT or 8080.")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(port: int | None, host: str):
    """Run the HTTP service (flag > THOTH_PORT > 8080)."""
    import uvicorn

    from .service import create_app

    if port is None:
        port = int(os.environ.get("THOTH_PORT", "8080"))
    try:
        uvicorn.run(create_app(), host=host, port=port, log_level="info")
    except (OSError, SystemExit) as exc:
        if isinstance(exc, SystemExit) and not exc.code:
            return
        click.echo(f"error: could not serve on {host}:{port}: {exc}", err=True)
        sys.exit(EXIT_IO)


if __name__ == "__main__":
    main()
