"""
Tagging Pipeline
Text to lemmatized analyses, with NLTK-compatible tagger and stemmer facades
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from nltk.stem.api import StemmerI
from nltk.tag.api import TaggerI

from qamar.cli.render import render_tag
from qamar.config import Config
from qamar.data_loaders.lexicon_db import LexiconBundle, get_lexicon_bundle
from qamar.lemmatization.lemma_generator import lemmatize
from qamar.tagging.tagger import tag_tokens
from qamar.tagging.types import Analysis, Category
from qamar.text.normalizer import normalize
from qamar.text.tokenizer import Token, TokenKind, tokenize

logger = logging.getLogger(__name__)

IDEMPOTENT_CATEGORIES = (Category.NOUN, Category.ADJECTIVE)


def analyze_tokens(tokens: Iterable[Token], bundle: LexiconBundle) -> List[Analysis]:
    """Tag a token sequence, apply the adjective rule, then lemmatize"""
    return [lemmatize(a, bundle) for a in tag_tokens(tokens, bundle)]


def analyze_text(text: str, bundle: Optional[LexiconBundle] = None,
                 fold_alef: bool = Config.FOLD_ALEF) -> List[Analysis]:
    """
    Full analysis of raw text

    Args:
        text: Raw text (diacritics allowed)
        bundle: Lexicon bundle, the bundled seed lexicon by default
        fold_alef: Fold alef variants during tokenization and look words
                   up in the folded view of the bundle

    Returns:
        One Analysis per token, punctuation and numbers included
    """
    if bundle is None:
        bundle = get_lexicon_bundle()
    if fold_alef:
        bundle = bundle.folded()
    return analyze_tokens(tokenize(text, fold_alef=fold_alef), bundle)


def lemma_of(word: str, bundle: LexiconBundle) -> str:
    """Lemma of a single word analyzed without context"""
    analyses = analyze_text(word, bundle)
    return analyses[0].lemma if analyses else word


def idempotence_failures(analyses: Sequence[Analysis],
                         bundle: LexiconBundle) -> List[Tuple[str, str, str]]:
    """
    Nominal lemmas that do not map back onto themselves

    Each noun or adjective lemma is analyzed again on its own; a
    different lemma is a failure and is logged at WARNING.

    Returns:
        (surface, lemma, lemma of the lemma) for every failure
    """
    failures = []
    seen = set()
    for analysis in analyses:
        if analysis.category not in IDEMPOTENT_CATEGORIES or analysis.lemma in seen:
            continue
        seen.add(analysis.lemma)
        again = lemma_of(analysis.lemma, bundle)
        if again != analysis.lemma:
            logger.warning("Lemma not idempotent: %s → %s → %s", analysis.surface, analysis.lemma, again)
            failures.append((analysis.surface, analysis.lemma, again))
    return failures


def _as_tokens(words: Sequence[str]) -> List[Token]:
    tokens = []
    offset = 0
    for word in words:
        parts = tokenize(word)
        kind = parts[0].kind if len(parts) == 1 else TokenKind.WORD
        tokens.append(Token(normalize(word), word, (offset, offset + len(word)), kind))
        offset += len(word) + 1
    return tokens


class ArabicTagger(TaggerI):
    """
    NLTK tagger over pre-split words

    ArabicTagger().tag(['العالم', 'العربي']) returns
    [('العالم', 'DTNN'), ('العربي', 'DTJJ')].
    """

    def __init__(self, bundle: Optional[LexiconBundle] = None):
        self.bundle = bundle if bundle is not None else get_lexicon_bundle()

    def analyze(self, words: Sequence[str]) -> List[Analysis]:
        return analyze_tokens(_as_tokens(words), self.bundle)

    def tag(self, tokens):
        analyses = self.analyze(tokens)
        return [(word, render_tag(a)) for word, a in zip(tokens, analyses)]


class ArabicLemmatizer(StemmerI):
    """NLTK stemmer interface returning the dictionary lemma of one word"""

    def __init__(self, bundle: Optional[LexiconBundle] = None):
        self.bundle = bundle if bundle is not None else get_lexicon_bundle()

    def stem(self, token):
        if not token or not token.strip():
            return token
        return lemma_of(token, self.bundle)
