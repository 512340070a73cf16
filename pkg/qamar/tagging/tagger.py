"""
Rule-Based Tagger
Walks the disambiguation levels for each token and carries left context
"""

import logging
from dataclasses import replace
from typing import Iterable, List, Optional, Tuple

from qamar.data_loaders.lexicon_db import LexiconBundle
from qamar.morphology.patterns import PatternMatch, match_pattern
from qamar.morphology.segmenter import TAA_MARBUTA, Segmentation, strip_affixes
from qamar.tagging.adjectives import retag_adjectives
from qamar.tagging.rules import (
    apply_context_rules,
    classify_by_affix,
    is_compatible,
    is_definite,
    resolve_ambiguous,
)
from qamar.tagging.types import (
    Analysis,
    Category,
    Count,
    Evidence,
    Features,
    Gender,
    NO_FEATURES,
    TagContext,
    Tense,
    Voice,
)
from qamar.text.normalizer import is_arabic_word
from qamar.text.tokenizer import Token, TokenKind

logger = logging.getLogger(__name__)

ARTICLE = 'ال'


def _closed_word(word: str, bundle: LexiconBundle):
    """Closed-word entry for the word, or for it minus a conjunction proclitic"""
    entry = bundle.lookup_closed(word)
    if entry is not None:
        return entry, None
    for proclitic in bundle.proclitics:
        rest = word[len(proclitic.surface):]
        if word.startswith(proclitic.surface) and rest:
            entry = bundle.lookup_closed(rest)
            if entry is not None:
                return entry, Segmentation((proclitic,), None, rest, None)
    return None, None


def _proper_noun(word: str, bundle: LexiconBundle) -> Optional[Segmentation]:
    """Segmentation of a proper noun: as written, minus proclitic, minus article"""
    article = bundle.prefix(ARTICLE)
    options: List[Tuple] = [()]
    options += [(p,) for p in bundle.proclitics if word.startswith(p.surface)]

    for proclitics in options:
        rest = word[sum(len(p.surface) for p in proclitics):]
        if not rest:
            continue
        if bundle.is_proper_noun(rest):
            if article is not None and rest.startswith(ARTICLE) and len(rest) > len(ARTICLE):
                return Segmentation(proclitics, article, rest[len(ARTICLE):], None)
            return Segmentation(proclitics, None, rest, None)
        if article is not None and rest.startswith(ARTICLE) and \
                bundle.is_proper_noun(rest[len(ARTICLE):]):
            return Segmentation(proclitics, article, rest[len(ARTICLE):], None)
    return None


def _broken_plural(seg: Segmentation, bundle: LexiconBundle) -> bool:
    return any(bundle.singular_of(k) is not None for k in seg.plural_keys)


def _number_and_gender(seg: Optional[Segmentation], broken: bool) -> Tuple[Count, Gender]:
    count, gender = Count.SINGULAR, Gender.MASCULINE
    suffix = seg.suffix if seg is not None else None
    if suffix is not None:
        if suffix.has('plural'):
            count = Count.PLURAL
        elif suffix.has('dual'):
            count = Count.DUAL
        if suffix.has('feminine'):
            gender = Gender.FEMININE
    if broken:
        count = Count.PLURAL
    return count, gender


def _verb_features(seg: Segmentation, match: PatternMatch) -> Features:
    pattern = match.pattern
    if seg.suffix is not None and seg.suffix.has('past'):
        tense = Tense.PAST
    elif seg.prefix is not None and seg.prefix.has('future'):
        tense = Tense.PRESENT
    elif pattern.aspect == 'imperfective':
        tense = Tense.PRESENT
    else:
        tense = Tense.PAST
    voice = Voice.PASSIVE if pattern.voice == 'passive' else Voice.ACTIVE
    return Features.verbal(tense, voice)


def _nominal(token: Token, category: Category, seg: Optional[Segmentation],
             match: Optional[PatternMatch], bundle: LexiconBundle) -> Analysis:
    broken = seg is not None and _broken_plural(seg, bundle)
    count, gender = _number_and_gender(seg, broken)
    analysis = Analysis(token, category, segmentation=seg, match=match,
                        lemma=token.surface, broken_plural=broken)
    features = Features.nominal(is_definite(analysis), count, gender)
    return replace(analysis, features=features)


def _fallback_segmentation(segs: List[Segmentation]) -> Segmentation:
    """
    First reading with noun-only evidence, else the bare word

    A bare preposition prefix (ب, ك, ل) is not trusted as evidence here.
    """
    for seg in segs:
        if classify_by_affix(seg) is not Evidence.NOUN:
            continue
        prefix = seg.prefix
        if prefix is not None and prefix.has('preposition') and not prefix.is_definite:
            continue
        return seg
    return segs[-1]


def _listed_feminine(segs: List[Segmentation], bundle: LexiconBundle) -> Optional[Segmentation]:
    """Proclitic reading whose remainder is a listed feminine singular cut before ة"""
    for seg in segs:
        if not seg.proclitics or seg.prefix is not None or seg.suffix is None:
            continue
        if seg.suffix.surface == TAA_MARBUTA and bundle.is_feminine_singular(seg.after_prefix):
            return seg
    return None


def _hides_stem(seg: Segmentation, bundle: LexiconBundle) -> bool:
    """A bare ب, ك or ل reading whose letter belongs to a stem that matches a pattern"""
    prefix = seg.prefix
    if prefix is None or not prefix.has('preposition') or prefix.is_definite:
        return False
    return bool(match_pattern(prefix.surface + seg.stem, bundle))


def _morphological(token: Token, ctx: TagContext, bundle: LexiconBundle) -> Analysis:
    segs = strip_affixes(token, bundle)
    seg = _listed_feminine(segs, bundle)
    if seg is not None:
        logger.debug("%s: listed feminine noun (%s)", token.surface, seg.describe())
        return _nominal(token, Category.NOUN, seg, None, bundle)

    for seg in segs:
        evidence = classify_by_affix(seg)
        if evidence is None:
            continue
        if _hides_stem(seg, bundle):
            continue
        for match in match_pattern(seg.stem, bundle):
            if not is_compatible(evidence, match):
                continue
            if evidence is Evidence.AMBIGUOUS:
                evidence = resolve_ambiguous(match, ctx, bundle)
            category = apply_context_rules(ctx, evidence)
            logger.debug("%s: %s via pattern %s root %s (%s)", token.surface, category.value,
                         match.pattern.label, match.root, seg.describe())
            if category is Category.VERB:
                return Analysis(token, category, _verb_features(seg, match), seg, match,
                                lemma=token.surface)
            return _nominal(token, category, seg, match, bundle)

    seg = _fallback_segmentation(segs)
    logger.debug("%s: no pattern, fallback noun (%s)", token.surface, seg.describe())
    return _nominal(token, Category.NOUN, seg, None, bundle)


def _analyze(token: Token, ctx: TagContext, bundle: LexiconBundle) -> Analysis:
    if token.kind is TokenKind.NUMBER:
        return Analysis(token, Category.NUMBER, lemma=token.surface)
    if token.kind is TokenKind.PUNCT:
        return Analysis(token, Category.PUNCT, lemma=token.surface)

    word = token.surface
    entry, seg = _closed_word(word, bundle)
    if entry is not None:
        logger.debug("%s: closed word (%s)", word, entry.subcategory)
        return Analysis(token, Category.PARTICLE, NO_FEATURES, seg, lemma=word,
                        subcategory=entry.subcategory, next_word_hint=entry.next_word_hint)

    seg = _proper_noun(word, bundle)
    if seg is not None:
        logger.debug("%s: proper noun", word)
        return Analysis(token, Category.PROPER_NOUN,
                        Features.nominal(True, Count.SINGULAR, Gender.NA), seg, lemma=word)

    if not is_arabic_word(word):
        return Analysis(token, Category.UNKNOWN, lemma=word)

    return _morphological(token, ctx, bundle)


def tag_token(token: Token, ctx: TagContext, bundle: LexiconBundle) -> Analysis:
    """
    Tag one token given its left context

    Levels, first success wins: number/punctuation, closed-word lookup,
    proper-noun lookup, non-Arabic → Unknown, affix/pattern/context
    analysis, fallback Noun.

    Args:
        token: Normalized token
        ctx: Left context (not modified here)
        bundle: Lexicon bundle

    Returns:
        Analysis with lemma still equal to the surface
    """
    if not token.is_word:
        return _analyze(token, ctx, bundle)

    memo = bundle.memo('analyses')
    key = (token.surface, ctx.signature())
    cached = memo.get(key)
    if cached is None:
        cached = _analyze(token, ctx, bundle)
        cached.features.check(cached.category)
        memo[key] = cached
    return replace(cached, token=token) if cached.token != token else cached


def tag_tokens(tokens: Iterable[Token], bundle: LexiconBundle) -> List[Analysis]:
    """Tag a token sequence left to right, then apply the adjective rule"""
    ctx = TagContext()
    analyses = []
    for token in tokens:
        analysis = tag_token(token, ctx, bundle)
        ctx.advance(analysis)
        analyses.append(analysis)
    return retag_adjectives(analyses)
