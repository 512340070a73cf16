"""Affix segmentation and root-and-pattern matching"""

from qamar.morphology.patterns import PatternMatch, instantiate, match_pattern, verify_root
from qamar.morphology.segmenter import Segmentation, strip_affixes

__all__ = [
    'PatternMatch',
    'Segmentation',
    'instantiate',
    'match_pattern',
    'strip_affixes',
    'verify_root',
]
