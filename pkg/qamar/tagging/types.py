"""
Tagging Types
Categories, morpho-syntactic features, per-token analyses and tagging context
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from qamar.errors import ContractViolation
from qamar.morphology.patterns import PatternMatch
from qamar.morphology.segmenter import Segmentation
from qamar.text.tokenizer import Token


class Category(str, Enum):
    NOUN = 'Noun'
    PROPER_NOUN = 'ProperNoun'
    ADJECTIVE = 'Adjective'
    VERB = 'Verb'
    PARTICLE = 'Particle'
    NUMBER = 'Number'
    PUNCT = 'Punct'
    UNKNOWN = 'Unknown'

    @property
    def is_nominal(self) -> bool:
        return self in NOMINAL_CATEGORIES


NOMINAL_CATEGORIES = frozenset({Category.NOUN, Category.ADJECTIVE, Category.PROPER_NOUN})


class Evidence(str, Enum):
    """Outcome of the affix and pattern disambiguation levels"""
    NOUN = 'noun'
    VERB = 'verb'
    AMBIGUOUS = 'ambiguous'


class Count(str, Enum):
    SINGULAR = 'singular'
    DUAL = 'dual'
    PLURAL = 'plural'
    NA = 'n/a'


class Gender(str, Enum):
    MASCULINE = 'masculine'
    FEMININE = 'feminine'
    NA = 'n/a'


class Tense(str, Enum):
    PAST = 'past'
    PRESENT = 'present'
    IMPERATIVE = 'imperative'
    NA = 'n/a'


class Voice(str, Enum):
    ACTIVE = 'active'
    PASSIVE = 'passive'
    NA = 'n/a'


@dataclass(frozen=True)
class Features:
    definite: bool = False
    count: Count = Count.NA
    gender: Gender = Gender.NA
    tense: Tense = Tense.NA
    voice: Voice = Voice.NA

    @classmethod
    def nominal(cls, definite: bool, count: Count, gender: Gender) -> 'Features':
        return cls(definite=definite, count=count, gender=gender)

    @classmethod
    def verbal(cls, tense: Tense, voice: Voice) -> 'Features':
        return cls(tense=tense, voice=voice)

    def check(self, category: Category) -> None:
        """
        Raise if features are set that the category does not carry

        Raises:
            ContractViolation: tense/voice outside verbs, or
                               definite/count/gender outside nominals
        """
        verbal = self.tense is not Tense.NA or self.voice is not Voice.NA
        nominal = self.definite or self.count is not Count.NA or self.gender is not Gender.NA
        if verbal and category is not Category.VERB:
            raise ContractViolation(f"{category.value} cannot carry tense or voice")
        if nominal and not category.is_nominal:
            raise ContractViolation(f"{category.value} cannot carry definiteness, count or gender")

    def describe(self) -> str:
        """Compact key=value rendering of the features that are set"""
        parts = []
        if self.definite:
            parts.append('definite')
        for name in ('count', 'gender', 'tense', 'voice'):
            value = getattr(self, name)
            if value.value != 'n/a':
                parts.append(f"{name}={value.value}")
        return ','.join(parts)


NO_FEATURES = Features()


@dataclass(frozen=True)
class Analysis:
    """
    Full per-token result

    `broken_plural` records a broken-plural dictionary hit; the adjective
    rule treats such a noun as feminine singular for agreement.
    """
    token: Token
    category: Category
    features: Features = NO_FEATURES
    segmentation: Optional[Segmentation] = None
    match: Optional[PatternMatch] = None
    lemma: str = ''
    subcategory: Optional[str] = None
    next_word_hint: Optional[str] = None
    broken_plural: bool = False
    lemma_method: Optional[str] = None

    @property
    def surface(self) -> str:
        return self.token.surface

    @property
    def pattern(self):
        return self.match.pattern if self.match else None

    @property
    def root(self) -> Optional[str]:
        return self.match.root if self.match else None

    @property
    def stem(self) -> str:
        if self.segmentation is not None:
            return self.segmentation.stem
        return self.token.surface

    @property
    def has_conjunction(self) -> bool:
        return self.segmentation is not None and self.segmentation.has_conjunction


@dataclass
class TagContext:
    """Left context carried from one word token to the next"""
    previous: Optional[Analysis] = None
    pending_hint: Optional[str] = None

    def advance(self, analysis: Analysis) -> None:
        # numbers and punctuation leave the context untouched
        if not analysis.token.is_word:
            return
        self.previous = analysis
        self.pending_hint = analysis.next_word_hint

    @property
    def previous_is_verb(self) -> bool:
        return self.previous is not None and self.previous.category is Category.VERB

    def signature(self):
        return self.previous_is_verb, self.pending_hint
