"""Lexicon resource loaders"""

from qamar.data_loaders.lexicon_db import (
    AffixEntry,
    ClosedWordEntry,
    LexiconBundle,
    LexiconDatabase,
    PatternEntry,
    get_lexicon_bundle,
    load_bundle,
    lookup_closed,
    lookup_proper,
)

__all__ = [
    'AffixEntry',
    'ClosedWordEntry',
    'LexiconBundle',
    'LexiconDatabase',
    'PatternEntry',
    'get_lexicon_bundle',
    'load_bundle',
    'lookup_closed',
    'lookup_proper',
]
