"""
Output Rendering
Treebank-style tags and TSV rows for tagged analyses
"""

from dataclasses import astuple, dataclass
from typing import List, Optional

from qamar.tagging.types import Analysis, Category, Count

EMPTY_FIELD = '-'
PROCLITIC_MARK = ' +'

# Closed-word subcategory → rendered code; any other subcategory renders as "particle"
PARTICLE_CODES = {
    'preposition': 'IN',
    'conjunction': 'CONJ',
    'adverb': 'ADV',
    'demonstrative': 'DEMO',
    'relative': 'CONJ',
    'auxiliary': 'KAN',
    'numeral': 'NUM',
}
DEFAULT_PARTICLE_CODE = 'particle'

_FIXED_TAGS = {
    Category.VERB: 'VV',
    Category.NUMBER: 'NUM',
    Category.PUNCT: 'PUNC',
    Category.UNKNOWN: 'unknown',
}


def _has_article(analysis: Analysis) -> bool:
    seg = analysis.segmentation
    return seg is not None and seg.prefix is not None and seg.prefix.is_definite


def render_tag(analysis: Analysis) -> str:
    """
    Rendered tag for one analysis

    Nouns render NN or NNS (dual counts as NNS), adjectives JJ, proper nouns
    NNP; each gains a DT prefix when the definite article was stripped.
    Particles render their subcategory code. A stripped conjunction
    proclitic appends " +".

    Args:
        analysis: Tagged analysis

    Returns:
        str: Tag such as 'DTNNS +'
    """
    category = analysis.category
    if category is Category.NOUN:
        plural = analysis.features.count in (Count.PLURAL, Count.DUAL)
        tag = 'NNS' if plural else 'NN'
    elif category is Category.ADJECTIVE:
        tag = 'JJ'
    elif category is Category.PROPER_NOUN:
        tag = 'NNP'
    elif category is Category.PARTICLE:
        tag = PARTICLE_CODES.get(analysis.subcategory, DEFAULT_PARTICLE_CODE)
    else:
        tag = _FIXED_TAGS[category]

    if category.is_nominal and _has_article(analysis):
        tag = 'DT' + tag
    if analysis.has_conjunction:
        tag += PROCLITIC_MARK
    return tag


@dataclass(frozen=True)
class OutputRecord:
    """One output row; column order is fixed"""
    surface: str
    tag: str
    category: str
    lemma: str
    root: str
    pattern: str
    features: str
    flags: str

    @classmethod
    def from_analysis(cls, analysis: Analysis) -> 'OutputRecord':
        flags = []
        seg = analysis.segmentation
        if seg is not None and seg.proclitics:
            flags.append('proclitic=' + ''.join(p.surface for p in seg.proclitics))
        if analysis.broken_plural:
            flags.append('broken-plural')
        if analysis.lemma_method:
            flags.append('lemma=' + analysis.lemma_method)

        pattern = analysis.pattern
        return cls(
            surface=analysis.surface,
            tag=render_tag(analysis),
            category=analysis.category.value,
            lemma=_field(analysis.lemma),
            root=_field(analysis.root),
            pattern=_field(pattern.label if pattern is not None else None),
            features=_field(analysis.features.describe()),
            flags=_field(','.join(flags)),
        )

    def to_row(self) -> str:
        return '\t'.join(astuple(self))


def _field(value: Optional[str]) -> str:
    return value if value else EMPTY_FIELD


def render_rows(analyses: List[Analysis]) -> List[str]:
    """TSV rows for every analysis, punctuation included"""
    return [OutputRecord.from_analysis(a).to_row() for a in analyses]


def render_lemmas(analyses: List[Analysis]) -> List[str]:
    return [f"{a.surface}\t{_field(a.lemma)}" for a in analyses]
