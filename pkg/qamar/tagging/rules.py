"""
Disambiguation Rules
Affix-class, pattern-class and context decisions, and definiteness
"""

from typing import Optional, Union

from qamar.data_loaders.lexicon_db import GENERAL, LexiconBundle, NOUN, VERB
from qamar.errors import ContractViolation
from qamar.morphology.patterns import PatternMatch
from qamar.morphology.segmenter import Segmentation
from qamar.tagging.types import Analysis, Category, Evidence, TagContext

_CATEGORY_BY_EVIDENCE = {
    Evidence.NOUN: Category.NOUN,
    Evidence.VERB: Category.VERB,
}


def classify_by_affix(seg: Segmentation) -> Optional[Evidence]:
    """
    Affix-class evidence for a segmentation

    Returns:
        Evidence.NOUN if any affix is noun-only, Evidence.VERB if any is
        verb-only, Evidence.AMBIGUOUS otherwise; None when noun-only and
        verb-only affixes collide (the reading is rejected)
    """
    classes = {a.affix_class for a in seg.affixes}
    if NOUN in classes and VERB in classes:
        return None
    if NOUN in classes:
        return Evidence.NOUN
    if VERB in classes:
        return Evidence.VERB
    return Evidence.AMBIGUOUS


def classify_by_pattern(match: PatternMatch, bundle: LexiconBundle) -> Evidence:
    """
    Pattern-class evidence

    Verb and noun patterns decide directly; a general pattern is a verb
    only when the stem is in the third-class verb dictionary.
    """
    cls = match.pattern.pattern_class
    if cls == VERB:
        return Evidence.VERB
    if cls == NOUN:
        return Evidence.NOUN
    return Evidence.VERB if bundle.is_third_class_verb(match.stem) else Evidence.NOUN


def is_compatible(evidence: Evidence, match: PatternMatch) -> bool:
    """Affix evidence and pattern class must not contradict each other"""
    cls = match.pattern.pattern_class
    if evidence is Evidence.NOUN:
        return cls != VERB
    if evidence is Evidence.VERB:
        return cls != NOUN
    return True


def resolve_ambiguous(match: PatternMatch, ctx: TagContext, bundle: LexiconBundle) -> Evidence:
    """A pending hint settles a general pattern before the verb dictionary is asked"""
    if match.pattern.pattern_class == GENERAL and ctx.pending_hint:
        return Evidence(ctx.pending_hint)
    return classify_by_pattern(match, bundle)


def apply_context_rules(ctx: TagContext, candidate: Union[Evidence, Category]) -> Category:
    """
    Context level: pending hints and the no-two-verbs rule

    An ambiguous candidate follows the pending hint (noun without one);
    a verb right after a verb is demoted to a noun.
    """
    if candidate is Evidence.AMBIGUOUS:
        candidate = Evidence(ctx.pending_hint) if ctx.pending_hint else Evidence.NOUN
    category = _CATEGORY_BY_EVIDENCE.get(candidate, candidate)

    if category is Category.VERB and ctx.previous_is_verb:
        return Category.NOUN
    return category


def is_definite(analysis: Analysis) -> bool:
    """
    Definiteness of a nominal

    True for a definite-article prefix, an attached possessive pronoun,
    or a proper noun.

    Raises:
        ContractViolation: called on a non-nominal analysis
    """
    if not analysis.category.is_nominal:
        raise ContractViolation(f"is_definite is undefined for {analysis.category.value}")
    if analysis.category is Category.PROPER_NOUN:
        return True

    seg = analysis.segmentation
    if seg is None:
        return False
    if seg.prefix is not None and seg.prefix.is_definite:
        return True
    return seg.suffix is not None and seg.suffix.has('pronoun')
