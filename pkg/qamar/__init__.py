"""
Qamar
Rule-based Arabic part-of-speech tagger and lemmatizer
"""

import logging

from qamar.config import DevelopmentConfig
from qamar.data_loaders.lexicon_db import load_bundle
from qamar.pipeline import ArabicLemmatizer, ArabicTagger, analyze_text

__version__ = '0.1.0'

__all__ = ['ArabicLemmatizer', 'ArabicTagger', 'analyze_text', 'create_tagger', '__version__']


def create_tagger(config_class=DevelopmentConfig) -> ArabicTagger:
    """
    Build a tagger from a configuration class

    Args:
        config_class: Config subclass supplying LEXICON_DIR, ENABLE_QUAD_ROOTS,
                      MEMO_SIZE and LOG_LEVEL

    Returns:
        ArabicTagger over a freshly loaded bundle
    """
    logging.getLogger('qamar').setLevel(config_class.LOG_LEVEL)
    bundle = load_bundle(config_class.LEXICON_DIR, config_class.ENABLE_QUAD_ROOTS,
                         config_class.MEMO_SIZE)
    return ArabicTagger(bundle)
