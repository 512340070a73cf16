"""Part-of-speech tagging"""

from qamar.tagging.adjectives import retag_adjectives
from qamar.tagging.rules import apply_context_rules, classify_by_affix, classify_by_pattern, is_definite
from qamar.tagging.tagger import tag_token, tag_tokens
from qamar.tagging.types import (
    Analysis,
    Category,
    Count,
    Evidence,
    Features,
    Gender,
    TagContext,
    Tense,
    Voice,
)

__all__ = [
    'Analysis',
    'Category',
    'Count',
    'Evidence',
    'Features',
    'Gender',
    'TagContext',
    'Tense',
    'Voice',
    'apply_context_rules',
    'classify_by_affix',
    'classify_by_pattern',
    'is_definite',
    'retag_adjectives',
    'tag_token',
    'tag_tokens',
]
