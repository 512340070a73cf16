"""
Command Line Interface
Tag, lemmatize and evaluate Arabic text files
"""

import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List

import click
from tabulate import tabulate

from qamar.config import Config
from qamar.data_loaders.lexicon_db import LexiconBundle, get_lexicon_bundle
from qamar.errors import QamarError
from qamar.evaluation.ablation import run_ablation
from qamar.evaluation.metrics import evaluate, format_report, read_gold, read_tagged, tag_distribution
from qamar.cli.render import render_lemmas, render_rows
from qamar.pipeline import analyze_text, idempotence_failures
from qamar.tagging.types import Category

logger = logging.getLogger(__name__)

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']
INPUT_FILE = click.Path(exists=True, dir_okay=False)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s [%(levelname)s] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        stream=sys.stderr,
    )


def _bundle(ctx: click.Context) -> LexiconBundle:
    try:
        return get_lexicon_bundle(ctx.obj['lexicon_dir'])
    except QamarError as e:
        raise click.ClickException(str(e)) from e


def _read_text(path: str) -> str:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise click.ClickException(f"{path}: not valid UTF-8 ({e.reason})") from e


def _emit(lines: List[str]) -> None:
    if lines:
        click.echo('\n'.join(lines))


@click.group()
@click.option('--lexicon-dir', envvar='QAMAR_LEXICON_DIR', default=None,
              type=click.Path(file_okay=False),
              help='Lexicon directory (default: bundled seed lexicon)')
@click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False),
              default=Config.LOG_LEVEL, show_default=True, help='Logging level on stderr')
@click.pass_context
def run(ctx, lexicon_dir, log_level):
    """Rule-based Arabic POS tagger and lemmatizer"""
    _configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj['lexicon_dir'] = lexicon_dir


@run.command()
@click.argument('files', nargs=-1, required=True, type=INPUT_FILE)
@click.option('--workers', type=click.IntRange(min=1), default=Config.WORKERS, show_default=True,
              help='Files tagged in parallel')
@click.pass_context
def tag(ctx, files, workers):
    """Tag FILES and print one TSV row per token"""
    bundle = _bundle(ctx)
    texts = [_read_text(path) for path in files]

    def tag_one(text):
        return render_rows(analyze_text(text, bundle))

    try:
        if workers > 1 and len(texts) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(tag_one, texts))
        else:
            results = [tag_one(text) for text in texts]
    except QamarError as e:
        raise click.ClickException(str(e)) from e

    lines = []
    for path, rows in zip(files, results):
        if len(files) > 1:
            lines.append(f"# {path}")
        lines.extend(rows)
    _emit(lines)


@run.command()
@click.argument('file', type=INPUT_FILE)
@click.pass_context
def lemmatize(ctx, file):
    """Print surface and lemma for every token of FILE"""
    bundle = _bundle(ctx)
    try:
        analyses = analyze_text(_read_text(file), bundle)
    except QamarError as e:
        raise click.ClickException(str(e)) from e
    _emit(render_lemmas(analyses))


@run.command('eval')
@click.argument('pred', type=INPUT_FILE)
@click.argument('gold', type=INPUT_FILE)
@click.option('--json', 'as_json', is_flag=True, help='Print the report as JSON')
@click.option('--collapse-adjectives', is_flag=True, help='Score Adjective as Noun')
@click.option('--include-punct', is_flag=True, help='Also score numbers and punctuation')
def eval_command(pred, gold, as_json, collapse_adjectives, include_punct):
    """Score tagger output PRED against the gold file GOLD"""
    try:
        predictions = read_tagged(pred)
        references = read_gold(gold)
        if not include_punct:
            predictions = [r for r in predictions if r.category is not Category.PUNCT]
            references = [r for r in references if r.category is not Category.PUNCT]
        report = evaluate(predictions, references, collapse_adjectives, include_punct)
    except QamarError as e:
        raise click.ClickException(str(e)) from e

    if as_json:
        click.echo(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        click.echo(format_report(report), nl=False)


@run.command()
@click.argument('file', type=INPUT_FILE)
@click.option('--check-lemmas', is_flag=True, help='Also re-lemmatize nominal lemmas')
@click.pass_context
def stats(ctx, file, check_lemmas):
    """Category distribution over the word tokens of FILE"""
    bundle = _bundle(ctx)
    try:
        analyses = analyze_text(_read_text(file), bundle)
        failures = idempotence_failures(analyses, bundle) if check_lemmas else []
    except QamarError as e:
        raise click.ClickException(str(e)) from e

    words = sum(1 for a in analyses if a.token.is_word)
    distribution = tag_distribution(analyses)
    rows = [[category.value, f"{share:.1f}%"] for category, share in distribution.items()]
    lines = [f"words: {words}", tabulate(rows, ['category', 'share'], tablefmt="pipe")]
    if check_lemmas:
        lines.append(f"lemma idempotence failures: {len(failures)}")
    _emit(lines)


@run.command()
@click.argument('file', type=INPUT_FILE)
@click.argument('gold', type=INPUT_FILE)
@click.option('--json', 'as_json', is_flag=True, help='Print the result as JSON')
@click.pass_context
def ablate(ctx, file, gold, as_json):
    """Minimum-resource run on FILE, scored on particle/nominal classes against GOLD (all words count)"""
    bundle = _bundle(ctx)
    try:
        result = run_ablation(_read_text(file), read_gold(gold), bundle)
    except QamarError as e:
        raise click.ClickException(str(e)) from e

    if as_json:
        click.echo(json.dumps(result.to_dict(), indent=2))
    else:
        click.echo(f"coarse accuracy: {result.accuracy:.4f} "
                   f"({result.correct}/{result.scored}, {result.outside} outside the two classes)")
