"""
Minimum-Resource Ablation
Tags with closed words, affix rules and the adjective rule only, scored on coarse classes
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from qamar.data_loaders.lexicon_db import LexiconBundle, get_lexicon_bundle
from qamar.evaluation.metrics import GoldRecord, check_alignment
from qamar.pipeline import analyze_text
from qamar.tagging.types import Category

logger = logging.getLogger(__name__)

PARTICLE_CLASS = 'particle'
NOMINAL_CLASS = 'nominal'


def coarse_class(category: Category) -> Optional[str]:
    """particle, nominal, or None for categories outside the two classes"""
    if category is Category.PARTICLE:
        return PARTICLE_CLASS
    if category.is_nominal:
        return NOMINAL_CLASS
    return None


@dataclass(frozen=True)
class AblationResult:
    scored: int
    correct: int
    # gold verbs, numbers and unknown words: scored, never correct
    outside: int

    @property
    def accuracy(self) -> float:
        return self.correct / self.scored if self.scored else 0.0

    def to_dict(self) -> Dict:
        return {
            'scored': self.scored,
            'correct': self.correct,
            'outside': self.outside,
            'accuracy': round(self.accuracy, 4),
        }


def run_ablation(text: str, gold: Sequence[GoldRecord],
                 bundle: Optional[LexiconBundle] = None) -> AblationResult:
    """
    Tag text with the minimum-resource bundle and score coarse classes

    Punctuation is dropped from both sides before alignment and every
    remaining token is scored. A token is correct when its gold category
    is a particle or a nominal and the prediction falls in the same
    class, so gold verbs, numbers and unknown words always count as
    misses.

    Args:
        text: Raw text
        gold: Gold records for the text's tokens
        bundle: Full bundle the minimal copy is derived from

    Returns:
        AblationResult

    Raises:
        AlignmentError: gold does not line up with the text's tokens
    """
    if bundle is None:
        bundle = get_lexicon_bundle()
    minimal = bundle.minimal()

    predictions = [a for a in analyze_text(text, minimal) if a.category is not Category.PUNCT]
    references = [g for g in gold if g.category is not Category.PUNCT]
    check_alignment(predictions, references)

    correct = outside = 0
    for pred, ref in zip(predictions, references):
        expected = coarse_class(ref.category)
        if expected is None:
            outside += 1
        elif coarse_class(pred.category) == expected:
            correct += 1

    result = AblationResult(len(references), correct, outside)
    logger.info("Minimum-resource ablation: %d/%d coarse classes correct (%.4f)",
                result.correct, result.scored, result.accuracy)
    return result
