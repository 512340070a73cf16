"""
Evaluation Metrics
Scores tagged output against gold annotations: accuracy, confusion, distribution
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from tabulate import tabulate

from qamar.errors import AlignmentError, GoldParseError, ResourceError
from qamar.tagging.types import Analysis, Category
from qamar.text.normalizer import normalize

logger = logging.getLogger(__name__)

LABELS: Tuple[Category, ...] = tuple(Category)
_INDEX = {category: i for i, category in enumerate(LABELS)}

NON_WORD_CATEGORIES = frozenset({Category.NUMBER, Category.PUNCT})

# Rendered tag vocabulary, plus the treebank codes found in printed reference output
TAG_CATEGORIES = {
    'NN': Category.NOUN,
    'NNS': Category.NOUN,
    'DTNN': Category.NOUN,
    'DTNNS': Category.NOUN,
    'JJ': Category.ADJECTIVE,
    'DTJJ': Category.ADJECTIVE,
    'VV': Category.VERB,
    'VB': Category.VERB,
    'VBD': Category.VERB,
    'VBP': Category.VERB,
    'VBN': Category.VERB,
    'NNP': Category.PROPER_NOUN,
    'DTNNP': Category.PROPER_NOUN,
    'IN': Category.PARTICLE,
    'CONJ': Category.PARTICLE,
    'ADV': Category.PARTICLE,
    'RB': Category.PARTICLE,
    'DEMO': Category.PARTICLE,
    'DT': Category.PARTICLE,
    'KAN': Category.PARTICLE,
    'RP': Category.PARTICLE,
    'WP': Category.PARTICLE,
    'PRP': Category.PARTICLE,
    'particle': Category.PARTICLE,
    'NUM': Category.NUMBER,
    'CD': Category.NUMBER,
    'PUNC': Category.PUNCT,
    'unknown': Category.UNKNOWN,
}

_TAG_FIXES = {'unknow': 'unknown', 'DFNN': 'DTNN'}
_TAG_NOISE = re.compile(r'[+\s]')


def normalize_tag(tag: str) -> str:
    """Drop proclitic markers and whitespace, and repair known misspellings"""
    tag = _TAG_NOISE.sub('', tag)
    return _TAG_FIXES.get(tag, tag)


def parse_category(label: str) -> Category:
    """
    Category for a gold label

    Accepts category values ('Noun'), member names ('proper_noun') and the
    rendered tag vocabulary ('DTNNS +').

    Raises:
        ValueError: unrecognized label
    """
    label = label.strip()
    try:
        return Category(label)
    except ValueError:
        pass
    by_name = Category.__members__.get(label.upper())
    if by_name is not None:
        return by_name
    category = TAG_CATEGORIES.get(normalize_tag(label))
    if category is None:
        raise ValueError(f"unknown category or tag {label!r}")
    return category


def lemma_key(lemma: str) -> str:
    """Comparison form of a lemma: alef variants and alef maksura folded"""
    return normalize(lemma, fold_alef=True, fold_yeh=True)


@dataclass(frozen=True)
class GoldRecord:
    """One annotated token; `tag` keeps the printed tag when the gold file used one"""
    surface: str
    category: Category
    lemma: Optional[str] = None
    tag: Optional[str] = None
    note: Optional[str] = None

    @property
    def is_word(self) -> bool:
        return self.category not in NON_WORD_CATEGORIES


Labelled = Union[Analysis, GoldRecord]


def _view(item: Labelled) -> Tuple[str, Category, Optional[str], bool]:
    if isinstance(item, Analysis):
        return item.surface, item.category, item.lemma or None, item.token.is_word
    return normalize(item.surface), item.category, item.lemma, item.is_word


# ---- Gold files ----

def _optional(cols: List[str], i: int) -> Optional[str]:
    if i >= len(cols):
        return None
    value = cols[i].strip()
    return None if value in ('', '-') else value


def _records(path) -> List[Tuple[int, List[str]]]:
    path = Path(path)
    if not path.is_file():
        raise ResourceError(path, f"Annotation file not found: {path}")
    rows = []
    with open(path, 'r', encoding='utf-8') as f:
        for line_no, line in enumerate(f, 1):
            line = line.rstrip('\r\n')
            if not line.strip() or line.startswith('#'):
                continue
            rows.append((line_no, line.split('\t')))
    return rows


def read_gold(path) -> List[GoldRecord]:
    """
    Read a gold TSV file

    Columns: surface, category or tag, optional lemma, optional note.
    Blank lines and lines starting with '#' are skipped; '-' marks an
    empty field.

    Raises:
        ResourceError: file is missing
        GoldParseError: wrong column count or unknown category
    """
    name = Path(path).name
    records = []
    for line_no, cols in _records(path):
        if not 2 <= len(cols) <= 4:
            raise GoldParseError(name, line_no, f"expected 2 to 4 columns, got {len(cols)}")
        label = cols[1].strip()
        try:
            category = parse_category(label)
        except ValueError as e:
            raise GoldParseError(name, line_no, str(e)) from e
        tag = None if label == category.value else label
        records.append(GoldRecord(normalize(cols[0].strip()), category,
                                  _optional(cols, 2), tag, _optional(cols, 3)))
    logger.info("Read %d gold records from %s", len(records), name)
    return records


def read_tagged(path) -> List[GoldRecord]:
    """
    Read tagger output (surface, tag, category, lemma, ...) as records

    Raises:
        ResourceError: file is missing
        GoldParseError: fewer than four columns or unknown category
    """
    name = Path(path).name
    records = []
    for line_no, cols in _records(path):
        if len(cols) < 4:
            raise GoldParseError(name, line_no, f"expected at least 4 columns, got {len(cols)}")
        try:
            category = parse_category(cols[2])
        except ValueError as e:
            raise GoldParseError(name, line_no, str(e)) from e
        records.append(GoldRecord(cols[0].strip(), category, _optional(cols, 3),
                                  _optional(cols, 1)))
    return records


def write_gold(records: Sequence[GoldRecord], path) -> None:
    """Write records in the gold TSV format read_gold accepts"""
    with open(path, 'w', encoding='utf-8') as f:
        for record in records:
            cols = [record.surface, record.tag or record.category.value, record.lemma or '-']
            if record.note:
                cols.append(record.note)
            f.write('\t'.join(cols) + '\n')


# ---- Scoring ----

@dataclass
class EvalReport:
    """
    Evaluation summary

    Confusion rows are gold categories and columns predicted ones, both in
    LABELS order; `per_category` is the diagonal share of each gold row.
    """
    token_count: int
    correct: int
    pos_accuracy: float
    lemma_accuracy: Optional[float]
    lemma_count: int
    per_category: Dict[Category, float]
    confusion: np.ndarray
    distribution: Dict[Category, float]
    mismatches: List[Tuple[int, str, Category, Category]] = field(default_factory=list)
    labels: Tuple[Category, ...] = LABELS

    def to_dict(self) -> Dict:
        confusion = {}
        for i, gold in enumerate(self.labels):
            row = {pred.value: int(self.confusion[i, j])
                   for j, pred in enumerate(self.labels) if self.confusion[i, j]}
            if row:
                confusion[gold.value] = row
        return {
            'token_count': self.token_count,
            'correct': self.correct,
            'pos_accuracy': round(self.pos_accuracy, 4),
            'lemma_accuracy': None if self.lemma_accuracy is None else round(self.lemma_accuracy, 4),
            'lemma_count': self.lemma_count,
            'per_category': {c.value: round(v, 4) for c, v in self.per_category.items()},
            'confusion': confusion,
            'distribution': {c.value: round(v, 2) for c, v in self.distribution.items()},
            'mismatches': [
                {'position': i, 'surface': s, 'gold': g.value, 'predicted': p.value}
                for i, s, g, p in self.mismatches
            ],
        }


def check_alignment(predictions: Sequence[Labelled], gold: Sequence[Labelled]) -> None:
    for i, (pred, ref) in enumerate(zip(predictions, gold)):
        pred_surface, ref_surface = _view(pred)[0], _view(ref)[0]
        if pred_surface != ref_surface:
            raise AlignmentError(i, f"predicted {pred_surface!r} but gold has {ref_surface!r}")
    if len(predictions) != len(gold):
        raise AlignmentError(min(len(predictions), len(gold)),
                             f"{len(predictions)} predictions against {len(gold)} gold records")


def _percentages(categories: Sequence[Category]) -> Dict[Category, float]:
    if not categories:
        return {}
    counts = np.bincount([_INDEX[c] for c in categories], minlength=len(LABELS))
    shares = counts * 100.0 / counts.sum()
    return {LABELS[i]: float(shares[i]) for i in np.flatnonzero(counts)}


def evaluate(predictions: Sequence[Labelled], gold: Sequence[Labelled],
             collapse_adjectives: bool = False, include_punct: bool = False) -> EvalReport:
    """
    Compare predictions with gold records position by position

    Args:
        predictions: Analyses (or records read from tagger output)
        gold: Gold records aligned 1:1 with predictions
        collapse_adjectives: Score Adjective as Noun on both sides
        include_punct: Also score number and punctuation tokens

    Returns:
        EvalReport over the scored tokens

    Raises:
        AlignmentError: sequences differ in length or in a surface
    """
    check_alignment(predictions, gold)

    def fold(category: Category) -> Category:
        if collapse_adjectives and category is Category.ADJECTIVE:
            return Category.NOUN
        return category

    confusion = np.zeros((len(LABELS), len(LABELS)), dtype=int)
    gold_categories = []
    mismatches = []
    lemma_total = lemma_hits = 0

    for i, (pred, ref) in enumerate(zip(predictions, gold)):
        surface, ref_category, ref_lemma, ref_is_word = _view(ref)
        _, pred_category, pred_lemma, _ = _view(pred)
        if not include_punct and not ref_is_word:
            continue
        ref_category, pred_category = fold(ref_category), fold(pred_category)
        confusion[_INDEX[ref_category], _INDEX[pred_category]] += 1
        gold_categories.append(ref_category)
        if ref_category is not pred_category:
            mismatches.append((i, surface, ref_category, pred_category))
        if ref_lemma is not None:
            lemma_total += 1
            lemma_hits += pred_lemma is not None and lemma_key(pred_lemma) == lemma_key(ref_lemma)

    total = int(confusion.sum())
    correct = int(np.trace(confusion))
    row_sums = confusion.sum(axis=1)
    per_category = {
        LABELS[i]: float(confusion[i, i] / row_sums[i]) for i in np.flatnonzero(row_sums)
    }

    report = EvalReport(
        token_count=total,
        correct=correct,
        pos_accuracy=correct / total if total else 0.0,
        lemma_accuracy=lemma_hits / lemma_total if lemma_total else None,
        lemma_count=lemma_total,
        per_category=per_category,
        confusion=confusion,
        distribution=_percentages(gold_categories),
        mismatches=mismatches,
    )
    logger.info("Evaluated %d tokens: pos accuracy %.4f", total, report.pos_accuracy)
    return report


def tag_distribution(analyses: Sequence[Labelled]) -> Dict[Category, float]:
    """
    Share of each category over word tokens, in percent

    Numbers and punctuation are not counted; empty input gives {}.
    """
    return _percentages([_view(a)[1] for a in analyses if _view(a)[3]])


def tag_mismatches(predicted: Sequence[str], expected: Sequence[str]) -> List[int]:
    """
    Positions where normalized tags differ

    Raises:
        AlignmentError: sequences differ in length
    """
    if len(predicted) != len(expected):
        raise AlignmentError(min(len(predicted), len(expected)),
                             f"{len(predicted)} predicted tags against {len(expected)} expected")
    return [i for i, (p, e) in enumerate(zip(predicted, expected))
            if normalize_tag(p) != normalize_tag(e)]


def tag_agreement(predicted: Sequence[str], expected: Sequence[str]) -> float:
    """Fraction of positions whose normalized tags agree (0.0 for empty input)"""
    if not expected and not predicted:
        return 0.0
    misses = tag_mismatches(predicted, expected)
    return 1.0 - len(misses) / len(expected)


def format_report(report: EvalReport) -> str:
    """Plain-text report: summary, per-category scores and confusion matrix"""
    summary = [
        ['tokens', report.token_count],
        ['correct', report.correct],
        ['pos_accuracy', f"{report.pos_accuracy:.4f}"],
        ['lemma_accuracy', '-' if report.lemma_accuracy is None else f"{report.lemma_accuracy:.4f}"],
        ['lemma_tokens', report.lemma_count],
    ]

    rows = []
    for category in report.labels:
        if category not in report.per_category and category not in report.distribution:
            continue
        rows.append([
            category.value,
            int(report.confusion[_INDEX[category]].sum()),
            f"{report.per_category.get(category, 0.0):.4f}",
            f"{report.distribution.get(category, 0.0):.1f}%",
        ])

    used = [i for i, c in enumerate(report.labels)
            if report.confusion[i].sum() or report.confusion[:, i].sum()]
    matrix = [[report.labels[i].value] + [int(report.confusion[i, j]) for j in used] for i in used]

    parts = [
        tabulate(summary, tablefmt="pipe"),
        tabulate(rows, ['category', 'gold', 'accuracy', 'share'], tablefmt="pipe"),
        tabulate(matrix, ['gold \\ predicted'] + [report.labels[j].value for j in used],
                 tablefmt="pipe"),
    ]
    return '\n\n'.join(parts) + '\n'
