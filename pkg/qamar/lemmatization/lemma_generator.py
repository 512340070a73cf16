"""
Lemma Generator
Verb lemmas from pattern maps, nominal lemmas from affix rules and dictionaries
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from qamar.data_loaders.lexicon_db import GENERAL, LexiconBundle
from qamar.errors import ConsistencyError, ContractViolation
from qamar.morphology.patterns import PatternMatch, instantiate
from qamar.morphology.segmenter import TAA_MARBUTA, Segmentation
from qamar.tagging.types import Analysis, Category, Features

logger = logging.getLogger(__name__)


class LemmaMethod(str, Enum):
    ROOT_IDENTITY = 'root-identity'
    PATTERN_MAP = 'pattern-map'
    SUFFIX_STRIP = 'suffix-strip'
    FEMININE_DICT = 'feminine-dict'
    TAA_SUBSTITUTION = 'taa-substitution'
    BROKEN_PLURAL_DICT = 'broken-plural-dict'
    PASSTHROUGH = 'passthrough'


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    method: LemmaMethod


def verb_lemma(stem: str, match: PatternMatch, bundle: LexiconBundle) -> LemmaResult:
    """
    Perfective 3rd person masculine singular form of a verb

    Args:
        stem: Verb stem (affixes removed)
        match: Verified pattern match of the stem
        bundle: Lexicon bundle

    Returns:
        LemmaResult: mapped template instantiated with the root; the stem
        itself when it is already perfective; the root otherwise

    Raises:
        ConsistencyError: the lemma template cannot take this root
    """
    pattern = match.pattern
    if pattern.lemma_template:
        target = bundle.pattern_by_template(pattern.lemma_template)
        if target is None:
            raise ConsistencyError(f"lemma template {pattern.lemma_template!r} is not a known pattern")
        try:
            return LemmaResult(instantiate(target, match.root), LemmaMethod.PATTERN_MAP)
        except ContractViolation as e:
            raise ConsistencyError(f"{pattern.template!r} → {target.template!r}: {e}") from e

    if pattern.aspect == 'perfective' or pattern.pattern_class == GENERAL:
        return LemmaResult(stem, LemmaMethod.SUFFIX_STRIP)
    return LemmaResult(match.root, LemmaMethod.ROOT_IDENTITY)


def noun_lemma(stem: str, seg: Optional[Segmentation], features: Features,
               bundle: LexiconBundle) -> LemmaResult:
    """
    Singular indefinite form of a noun or adjective

    Rules, first hit wins: broken-plural dictionary; ون/ين removed;
    ات removed with ة restored for listed feminine singulars; ة restored
    for taa-bearing suffixes; dual and pronoun suffixes removed; otherwise
    the stem, which already lacks the article.

    Args:
        stem: Stem after affix removal
        seg: Segmentation the stem came from
        features: Nominal features of the analysis
        bundle: Lexicon bundle

    Returns:
        LemmaResult
    """
    suffix = seg.suffix if seg is not None else None
    keys = seg.plural_keys if seg is not None else (stem + TAA_MARBUTA, stem)
    for key in keys:
        singular = bundle.singular_of(key)
        if singular is not None:
            return LemmaResult(singular, LemmaMethod.BROKEN_PLURAL_DICT)

    if suffix is None:
        return LemmaResult(stem, LemmaMethod.PASSTHROUGH)

    if suffix.has('plural') and suffix.has('masculine'):
        return LemmaResult(stem, LemmaMethod.SUFFIX_STRIP)

    if suffix.has('plural') and suffix.has('feminine'):
        if bundle.is_feminine_singular(stem + TAA_MARBUTA):
            return LemmaResult(stem + TAA_MARBUTA, LemmaMethod.FEMININE_DICT)
        return LemmaResult(stem, LemmaMethod.SUFFIX_STRIP)

    if suffix.has('taa'):
        return LemmaResult(stem + TAA_MARBUTA, LemmaMethod.TAA_SUBSTITUTION)

    return LemmaResult(stem, LemmaMethod.SUFFIX_STRIP)


def lemmatize(analysis: Analysis, bundle: LexiconBundle) -> Analysis:
    """
    Fill in the lemma of a tagged analysis

    Verbs go through verb_lemma, nominals through noun_lemma. A proper
    noun loses its و/ف proclitic but keeps the article; particles,
    numbers, punctuation and unknown words keep their surface.
    """
    category = analysis.category
    if category is Category.VERB and analysis.match is not None:
        result = verb_lemma(analysis.stem, analysis.match, bundle)
    elif category in (Category.NOUN, Category.ADJECTIVE):
        result = noun_lemma(analysis.stem, analysis.segmentation, analysis.features, bundle)
    elif category is Category.PROPER_NOUN and analysis.segmentation is not None:
        result = LemmaResult(analysis.segmentation.without_proclitics, LemmaMethod.PASSTHROUGH)
    else:
        result = LemmaResult(analysis.surface, LemmaMethod.PASSTHROUGH)

    return replace(analysis, lemma=result.lemma, lemma_method=result.method.value)
