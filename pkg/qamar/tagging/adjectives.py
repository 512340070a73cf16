"""
Adjective Re-categorization
Relabels a noun as an adjective when it agrees with the nominal before it
"""

import logging
from dataclasses import replace
from typing import List, Sequence, Tuple

from qamar.tagging.types import Analysis, Category, Count, Gender

logger = logging.getLogger(__name__)

_HEADS = (Category.NOUN, Category.ADJECTIVE)


def agreement_features(analysis: Analysis) -> Tuple[Count, Gender]:
    """
    (count, gender) a following adjective must match

    A broken plural agrees as feminine singular.
    """
    if analysis.broken_plural:
        return Count.SINGULAR, Gender.FEMININE
    return analysis.features.count, analysis.features.gender


def has_blocking_prefix(analysis: Analysis) -> bool:
    """Any proclitic, or a prefix other than the bare definite article"""
    seg = analysis.segmentation
    if seg is None:
        return False
    if seg.proclitics:
        return True
    prefix = seg.prefix
    return prefix is not None and not (prefix.is_definite and not prefix.has('preposition'))


def qualifies(previous: Analysis, current: Analysis) -> bool:
    """All adjective conditions for `current` given the token right before it"""
    if current.category is not Category.NOUN:
        return False
    if not previous.token.is_word or previous.category not in _HEADS:
        return False
    if has_blocking_prefix(current):
        return False
    literal = (current.features.count, current.features.gender)
    if literal != agreement_features(previous):
        return False
    return current.features.definite == previous.features.definite


def retag_adjectives(analyses: Sequence[Analysis]) -> List[Analysis]:
    """
    Relabel qualifying nouns as adjectives, left to right

    A noun becomes an adjective when it has no proclitic and no prefix
    besides ال, the token right before it is a noun or adjective with the
    same count and gender, and both agree in definiteness. Decisions use
    the already-updated previous analysis, so adjectives can chain.

    Args:
        analyses: Fully tagged sequence

    Returns:
        New list; only relabeled entries differ
    """
    out = list(analyses)
    for i in range(1, len(out)):
        if qualifies(out[i - 1], out[i]):
            out[i] = replace(out[i], category=Category.ADJECTIVE)
            logger.debug("%s: noun → adjective after %s", out[i].surface, out[i - 1].surface)
    return out
