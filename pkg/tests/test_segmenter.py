"""
Unit tests for the Affix Segmenter
"""
import random
from itertools import product

import pytest

from qamar.data_loaders.lexicon_db import NOUN, VERB
from qamar.morphology.patterns import match_pattern
from qamar.morphology.segmenter import strip_affixes
from qamar.pipeline import analyze_text
from qamar.text.tokenizer import tokenize


def _key(seg):
    return (tuple(p.surface for p in seg.proclitics),
            seg.prefix.surface if seg.prefix else None,
            seg.stem,
            seg.suffix.surface if seg.suffix else None)


def brute_force_splits(word, bundle):
    """Every proclitic/prefix/stem/suffix split allowed by the affix tables"""
    found = set()
    proclitic_options = [()] + [(p,) for p in bundle.proclitics
                                if word.startswith(p.surface)
                                and len(word) - len(p.surface) >= p.min_stem]
    plain_prefixes = [p for p in bundle.prefixes if not p.is_proclitic]

    for proclitics, prefix, suffix in product(proclitic_options, [None] + plain_prefixes,
                                              [None] + list(bundle.suffixes)):
        rest = word[sum(len(p.surface) for p in proclitics):]
        if prefix is None and suffix is None:
            found.add((tuple(p.surface for p in proclitics), None, rest, None))
            continue
        if prefix is not None and not rest.startswith(prefix.surface):
            continue
        if suffix is not None and not rest.endswith(suffix.surface):
            continue
        classes = {a.affix_class for a in (prefix, suffix) if a is not None}
        if NOUN in classes and VERB in classes:
            continue
        head = len(prefix.surface) if prefix else 0
        tail = len(suffix.surface) if suffix else 0
        stem = rest[head:len(rest) - tail]
        floor = max([bundle.min_stem_length] + [a.min_stem for a in (prefix, suffix) if a])
        if len(stem) < floor:
            continue
        found.add((tuple(p.surface for p in proclitics),
                   prefix.surface if prefix else None, stem,
                   suffix.surface if suffix else None))
    return found


class TestStripAffixes:
    """Test suite for segmentation enumeration"""

    def test_proclitic_and_article(self, bundle):
        keys = [_key(s) for s in strip_affixes("والبنوك", bundle)]

        assert (('و',), 'ال', 'بنوك', None) in keys

    def test_proclitic_readings_come_first(self, bundle):
        segs = strip_affixes("والبنوك", bundle)

        assert segs[0].proclitics
        assert segs[-1].proclitics == ()
        assert segs[-1].stem == "والبنوك"

    def test_bare_reading_is_last(self, bundle):
        segs = strip_affixes("يستخرجون", bundle)

        assert segs[-1].is_bare
        assert segs[-1].stem == "يستخرجون"
        assert ((), None, 'يستخرج', 'ون') in [_key(s) for s in segs]

    def test_longest_affix_first(self, bundle):
        segs = strip_affixes("معالجتها", bundle)

        assert segs[0].suffix.surface == 'تها'
        assert segs[0].stem == 'معالج'

    def test_short_word_is_only_bare(self, bundle):
        """Affixes never leave a stem below their minimum length"""
        segs = strip_affixes("كتب", bundle)

        assert len(segs) == 1
        assert segs[0].is_bare

    def test_future_prefix(self, bundle):
        keys = [_key(s) for s in strip_affixes("سيكتب", bundle)]

        assert ((), 'س', 'يكتب', None) in keys

    def test_no_noun_verb_affix_pair(self, bundle):
        """The article never combines with a verb-only suffix"""
        keys = [_key(s) for s in strip_affixes("الكتبوا", bundle)]

        assert ((), 'ال', 'كتبوا', None) in keys
        assert ((), None, 'الكتب', 'وا') in keys
        assert ((), 'ال', 'كتب', 'وا') not in keys

    def test_reconstructs_surface(self, bundle, education_text, technical_text):
        for token in tokenize(education_text + ' ' + technical_text):
            if not token.is_word:
                continue
            for seg in strip_affixes(token, bundle):
                assert seg.surface == token.surface

    def test_cached_result_is_not_shared(self, bundle):
        first = strip_affixes("المدارس", bundle)
        first.clear()

        assert strip_affixes("المدارس", bundle)

    def test_describe(self, bundle):
        seg = [s for s in strip_affixes("والبنوك", bundle)
               if _key(s) == (('و',), 'ال', 'بنوك', None)][0]

        assert seg.describe() == 'و+ال+بنوك'
        assert seg.has_conjunction
        assert seg.without_proclitics == 'البنوك'


class TestBruteForceOracle:
    """Test suite comparing segmentation against exhaustive enumeration"""

    @pytest.fixture(scope="class")
    def sampled_words(self, education_text, technical_text):
        words = [t for t in tokenize(education_text + ' ' + technical_text) if t.is_word]
        return random.Random(7).choices(words, k=1000)

    def test_enumeration_matches_oracle(self, bundle, sampled_words):
        for token in sampled_words:
            segs = strip_affixes(token, bundle)
            keys = [_key(s) for s in segs]

            assert len(keys) == len(set(keys))
            assert set(keys) == brute_force_splits(token.surface, bundle)

    def test_chosen_segmentation_is_an_oracle_split(self, bundle, education_text, technical_text):
        """A pattern-matched reading is one of the exhaustive splits whose stem matches"""
        analyses = [a for a in analyze_text(education_text + ' ' + technical_text, bundle)
                    if a.match is not None]
        for analysis in random.Random(7).choices(analyses, k=1000):
            matching = {key for key in brute_force_splits(analysis.surface, bundle)
                        if match_pattern(key[2], bundle)}

            assert _key(analysis.segmentation) in matching
            assert analysis.match in match_pattern(analysis.stem, bundle)
