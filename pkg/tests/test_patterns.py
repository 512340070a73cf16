"""
Unit tests for the Pattern Matcher
"""
import random

import pytest

from qamar.morphology.patterns import instantiate, match_pattern, verify_root
from qamar.errors import ContractViolation

SAMPLES_PER_PATTERN = 100


def _pairs(matches):
    return [(m.pattern.template, m.root) for m in matches]


class TestMatchPattern:
    """Test suite for root-and-pattern matching"""

    def test_reciprocal_general_pattern(self, bundle):
        assert ('ت1ا23', 'نزل') in _pairs(match_pattern("تنازل", bundle))

    def test_imperfective_istaf_al(self, bundle):
        matches = match_pattern("يستخرج", bundle)

        assert matches[0].pattern.template == 'يست123'
        assert matches[0].root == 'خرج'

    def test_hollow_slot_recovers_waw(self, bundle):
        """The surface alef of a hollow slot maps back to و"""
        assert ('ن1ت2~3', 'حوج') in _pairs(match_pattern("نحتاج", bundle))

    def test_hollow_slot_keeps_every_listed_root(self, bundle):
        """Both the و and the ي reading come back when both roots are listed"""
        pairs = _pairs(match_pattern("مزال", bundle))

        assert ('م12~3', 'زول') in pairs
        assert ('م12~3', 'زيل') in pairs
        assert pairs.index(('م12~3', 'زول')) < pairs.index(('م12~3', 'زيل'))

    def test_hollow_slot_counts_as_fixed_letter(self, bundle):
        """است12~3 pins four letters and outranks ا1ت2ا3, which pins three"""
        matches = match_pattern("استقام", bundle)

        assert (matches[0].pattern.template, matches[0].root) == ('است12~3', 'قوم')
        assert ('ا1ت2ا3', 'سقم') in _pairs(matches)
        assert bundle.pattern_by_template('است12~3').fixed_letters == 4
        assert bundle.pattern_by_template('ا1ت2ا3').fixed_letters == 3

    def test_infa_al(self, bundle):
        matches = match_pattern("تندرج", bundle)

        assert matches[0].pattern.template == 'تن123'
        assert matches[0].root == 'درج'

    def test_tri_roots_rank_first(self, bundle):
        for stem in ("مكتوب", "استخراج", "تنازل"):
            arities = [m.pattern.arity for m in match_pattern(stem, bundle)]
            assert arities == sorted(arities)

    @pytest.mark.parametrize("stem", ["", "abc", "قثغ"])
    def test_no_match(self, bundle, stem):
        assert match_pattern(stem, bundle) == []

    def test_verify_root(self, bundle):
        assert verify_root("كتب", bundle)
        assert not verify_root("قثغ", bundle)


class TestInstantiate:
    """Test suite for pattern instantiation"""

    def test_fills_slots(self, bundle):
        assert instantiate(bundle.pattern_by_template('م12و3'), 'كتب') == 'مكتوب'
        assert instantiate(bundle.pattern_by_template('است123'), 'خرج') == 'استخرج'

    def test_hollow_slot(self, bundle):
        assert instantiate(bundle.pattern_by_template('است12~3'), 'قوم') == 'استقام'

    def test_wrong_arity(self, bundle):
        with pytest.raises(ContractViolation):
            instantiate(bundle.pattern_by_template('است123'), 'كتبب')

    def test_hollow_slot_needs_weak_letter(self, bundle):
        with pytest.raises(ContractViolation, match="hollow"):
            instantiate(bundle.pattern_by_template('12~3'), 'كتب')


class TestRoundTrip:
    """Generated stems match back to the pattern that produced them"""

    @staticmethod
    def _roots_for(pattern, bundle):
        roots = sorted(bundle.tri_roots if pattern.arity == 3 else bundle.quad_roots)
        hollow = [slot.position for slot in pattern.slots if slot.hollow]
        return [r for r in roots if all(r[p - 1] in 'وي' for p in hollow)]

    def test_every_pattern(self, bundle):
        rng = random.Random(11)
        for pattern in bundle.patterns:
            roots = self._roots_for(pattern, bundle)
            for root in rng.sample(roots, min(SAMPLES_PER_PATTERN, len(roots))):
                stem = instantiate(pattern, root)
                found = [m for m in match_pattern(stem, bundle)
                         if m.pattern.template == pattern.template]

                assert root in [m.root for m in found], f"{stem} lost root {root} under {pattern.template}"
                assert all(instantiate(m.pattern, m.root) == stem for m in found)
