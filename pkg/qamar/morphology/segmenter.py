"""
Affix Segmenter
Longest-first prefix/suffix stripping with conjunction proclitics peeled first
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from qamar.data_loaders.lexicon_db import AffixEntry, LexiconBundle, NOUN, VERB
from qamar.text.tokenizer import Token

logger = logging.getLogger(__name__)

TAA_MARBUTA = 'ة'


@dataclass(frozen=True)
class Segmentation:
    """One (proclitics, prefix, stem, suffix) reading of a word"""
    proclitics: Tuple[AffixEntry, ...]
    prefix: Optional[AffixEntry]
    stem: str
    suffix: Optional[AffixEntry]

    @property
    def surface(self) -> str:
        return (''.join(p.surface for p in self.proclitics)
                + (self.prefix.surface if self.prefix else '')
                + self.stem
                + (self.suffix.surface if self.suffix else ''))

    @property
    def affixes(self) -> Tuple[AffixEntry, ...]:
        found = list(self.proclitics)
        if self.prefix:
            found.append(self.prefix)
        if self.suffix:
            found.append(self.suffix)
        return tuple(found)

    @property
    def has_conjunction(self) -> bool:
        return any(p.has('conjunction') for p in self.proclitics)

    @property
    def is_bare(self) -> bool:
        return self.prefix is None and self.suffix is None

    @property
    def without_proclitics(self) -> str:
        """Word with conjunction proclitics removed"""
        return self.surface[sum(len(p.surface) for p in self.proclitics):]

    @property
    def after_prefix(self) -> str:
        """Stem plus suffix: the word minus proclitics and prefix"""
        return self.stem + (self.suffix.surface if self.suffix else '')

    @property
    def plural_keys(self) -> Tuple[str, ...]:
        """Spellings under which the word may be listed as a broken plural"""
        keys = [self.after_prefix, self.stem + TAA_MARBUTA]
        # a stem cut before ة is not a plural of its own
        if self.suffix is None or not self.suffix.has('taa'):
            keys.append(self.stem)
        return tuple(dict.fromkeys(keys))

    def has_feature(self, feature: str) -> bool:
        return any(a.has(feature) for a in self.affixes)

    def describe(self) -> str:
        parts = [p.surface + '+' for p in self.proclitics]
        if self.prefix:
            parts.append(self.prefix.surface + '+')
        parts.append(self.stem)
        if self.suffix:
            parts.append('+' + self.suffix.surface)
        return ''.join(parts)


def _has_class_conflict(prefix: Optional[AffixEntry], suffix: Optional[AffixEntry]) -> bool:
    classes = {a.affix_class for a in (prefix, suffix) if a is not None}
    return NOUN in classes and VERB in classes


def _candidates(proclitics: Tuple[AffixEntry, ...], rest: str,
                bundle: LexiconBundle) -> List[Segmentation]:
    """Every prefix/suffix split of `rest`, longest affixes first, bare last"""
    prefixes = [None] + [p for p in bundle.prefixes
                         if not p.is_proclitic and rest.startswith(p.surface)]
    suffixes = [None] + [s for s in bundle.suffixes if rest.endswith(s.surface)]

    ranked = []
    for prefix in prefixes:
        for suffix in suffixes:
            if prefix is None and suffix is None:
                continue
            if _has_class_conflict(prefix, suffix):
                continue
            head = len(prefix.surface) if prefix else 0
            tail = len(suffix.surface) if suffix else 0
            stem = rest[head:len(rest) - tail]
            floor = max(bundle.min_stem_length,
                        prefix.min_stem if prefix else 0,
                        suffix.min_stem if suffix else 0)
            if len(stem) < floor:
                continue
            key = (-(head + tail), -tail,
                   prefix.order if prefix else -1,
                   suffix.order if suffix else -1)
            ranked.append((key, Segmentation(proclitics, prefix, stem, suffix)))

    ranked.sort(key=lambda item: item[0])
    segs = [seg for _, seg in ranked]
    segs.append(Segmentation(proclitics, None, rest, None))
    return segs


def strip_affixes(token: Union[Token, str], bundle: LexiconBundle) -> List[Segmentation]:
    """
    Enumerate segmentations of a word, longest affixes first

    Conjunction proclitics (و, ف) are peeled before the prefix/suffix
    round; readings with the proclitic removed come first, then the
    readings of the whole word, ending with the bare word. A noun-only
    and a verb-only affix never co-occur in one reading.

    Args:
        token: Word token (or its normalized surface)
        bundle: Lexicon bundle supplying the affix tables

    Returns:
        Ordered list of Segmentation; never empty for a non-empty word
    """
    word = token.surface if isinstance(token, Token) else token
    memo = bundle.memo('segmentations')
    cached = memo.get(word)
    if cached is not None:
        return list(cached)

    options: List[Tuple[AffixEntry, ...]] = []
    for proclitic in bundle.proclitics:
        if word.startswith(proclitic.surface) and \
                len(word) - len(proclitic.surface) >= proclitic.min_stem:
            options.append((proclitic,))
    options.append(())

    segs: List[Segmentation] = []
    for proclitics in options:
        rest = word[sum(len(p.surface) for p in proclitics):]
        segs.extend(_candidates(proclitics, rest, bundle))

    memo[word] = tuple(segs)
    return segs
