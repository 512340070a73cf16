"""
Pattern Matcher
Root-and-pattern matching, root verification and pattern instantiation
"""

import logging
from dataclasses import dataclass
from typing import List

from qamar.data_loaders.lexicon_db import LexiconBundle, PatternEntry
from qamar.errors import ContractViolation
from qamar.text.normalizer import ALEF, is_arabic_word

logger = logging.getLogger(__name__)

HOLLOW_SURFACE = ALEF
HOLLOW_ROOT_LETTERS = ('و', 'ي')


@dataclass(frozen=True)
class PatternMatch:
    pattern: PatternEntry
    root: str
    stem: str


def verify_root(root: str, bundle: LexiconBundle) -> bool:
    """True iff root is a listed tri-root (or quad root when enabled)"""
    return bundle.is_root(root)


def instantiate(pattern: PatternEntry, root: str) -> str:
    """
    Fill a pattern's root slots with root letters

    Args:
        pattern: Pattern template
        root: Root letters in order

    Returns:
        Generated stem

    Raises:
        ContractViolation: root length differs from the pattern arity, or a
                           hollow slot receives a letter other than و/ي
    """
    if len(root) != pattern.arity:
        raise ContractViolation(
            f"root {root!r} has {len(root)} letters, pattern {pattern.template!r} needs {pattern.arity}")

    out = []
    for slot in pattern.slots:
        if not slot.position:
            out.append(slot.literal)
            continue
        letter = root[slot.position - 1]
        if slot.hollow:
            if letter not in HOLLOW_ROOT_LETTERS:
                raise ContractViolation(
                    f"hollow slot {slot.position} of {pattern.template!r} needs و or ي, got {letter!r}")
            out.append(HOLLOW_SURFACE)
        else:
            out.append(letter)
    return ''.join(out)


def _candidate_roots(pattern: PatternEntry, stem: str) -> List[str]:
    """Roots that would make `pattern` spell `stem`, hollow readings و before ي"""
    roots = ['']
    for slot, char in zip(pattern.slots, stem):
        if not slot.position:
            if char != slot.literal:
                return []
        elif slot.hollow:
            if char != HOLLOW_SURFACE:
                return []
            roots = [r + letter for r in roots for letter in HOLLOW_ROOT_LETTERS]
        else:
            roots = [r + char for r in roots]
    return roots


def _specificity(match: PatternMatch):
    return (match.pattern.arity != 3, -match.pattern.fixed_letters, match.pattern.order)


def match_pattern(stem: str, bundle: LexiconBundle) -> List[PatternMatch]:
    """
    Find every (pattern, root) pair that spells `stem` with a verified root

    A hollow pattern yields one match per verified reading, so a stem can
    carry both its و and its ي root. Tri-root matches come first, then
    patterns pinning more letters (hollow slots count), then file order.

    Args:
        stem: Normalized stem
        bundle: Lexicon bundle

    Returns:
        Ordered list of PatternMatch (empty when nothing fits)
    """
    memo = bundle.memo('pattern_matches')
    cached = memo.get(stem)
    if cached is not None:
        return list(cached)

    matches: List[PatternMatch] = []
    if stem and is_arabic_word(stem):
        for pattern in bundle.patterns_of_length(len(stem)):
            for root in _candidate_roots(pattern, stem):
                if verify_root(root, bundle):
                    matches.append(PatternMatch(pattern, root, stem))
        matches.sort(key=_specificity)

    memo[stem] = tuple(matches)
    return matches
