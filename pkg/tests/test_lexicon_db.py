"""
Unit tests for the Lexicon Database Loader
"""
from dataclasses import replace

import pytest

from qamar.data_loaders.lexicon_db import (
    LexiconDatabase,
    MemoTable,
    PatternEntry,
    canonical_root,
    get_lexicon_bundle,
    load_bundle,
    lookup_closed,
    lookup_proper,
    parse_template,
)
from qamar.errors import ConsistencyError, LexiconParseError, ResourceError
from qamar.pipeline import analyze_text
from tests.conftest import append_line


class TestSeedLexicon:
    """Test suite for the shipped seed lexicon"""

    def test_resource_counts(self, bundle):
        """Every resource loads with its documented size"""
        counts = bundle.counts()

        assert counts['closed_words'] == 346
        assert counts['closed_groups'] == 16
        assert counts['patterns'] == 61
        assert counts['tri_roots'] == 3829
        assert counts['quad_roots'] == 30
        assert counts['third_class_verbs'] == 943
        assert counts['broken_plurals'] == 99
        assert counts['verb_lemma_map'] == 19

    def test_closed_word_lookup(self, bundle):
        """Closed words carry their group and next-word hint"""
        entry = lookup_closed(bundle, "في")

        assert entry.subcategory == 'preposition'
        assert entry.next_word_hint == 'noun'
        assert lookup_closed(bundle, "سوف").next_word_hint == 'verb'
        assert lookup_closed(bundle, "كتاب") is None

    def test_closed_word_lookup_is_exact(self, bundle):
        """No normalization or folding happens at lookup time"""
        assert lookup_closed(bundle, "فى") is None

    def test_proper_noun_lookup(self, bundle):
        assert lookup_proper(bundle, "العراق")
        assert lookup_proper(bundle, "بغداد")
        assert not lookup_proper(bundle, "النظام")

    def test_roots_compare_hamza_canonically(self, bundle):
        """Any hamza seat verifies against the listed spelling"""
        assert bundle.is_root("كتب")
        assert bundle.is_root("نشأ")
        assert bundle.is_root("نشء")
        assert canonical_root("سأل") == canonical_root("سئل")

    def test_root_arity(self, bundle):
        """Only 3- and 4-letter roots exist"""
        assert not bundle.is_root("كت")
        assert not bundle.is_root("استخرج")

    def test_broken_plural_lookup_folds_alef(self, bundle):
        """Broken plurals are found with or without hamza on alef"""
        assert bundle.singular_of("أنظمة") == "نظام"
        assert bundle.singular_of("انظمة") == "نظام"
        assert bundle.singular_of("مشاريع") == "مشروع"
        assert bundle.singular_of("كتاب") is None

    def test_verb_lemma_templates_resolved(self, bundle):
        """verb_lemma_map targets are attached to their patterns"""
        assert bundle.pattern_by_template('يست123').lemma_template == 'است123'
        assert bundle.pattern_by_template('ن1ت2~3').lemma_template == 'ا1ت2~3'
        assert bundle.pattern_by_template('ت1ا23').lemma_template is None

    def test_affix_tables(self, bundle):
        """The article is a noun-only definite prefix; و is a proclitic"""
        article = bundle.prefix('ال')

        assert article.is_definite
        assert article.affix_class == 'noun'
        assert [p.surface for p in bundle.proclitics] == ['و', 'ف']

    def test_minimal_bundle(self, bundle):
        """The minimum-resource copy keeps only closed words and affixes"""
        minimal = bundle.minimal()

        assert minimal.patterns == ()
        assert not minimal.tri_roots
        assert not minimal.proper_nouns
        assert minimal.closed_words == bundle.closed_words
        assert minimal.prefixes == bundle.prefixes
        assert len(bundle.patterns) == 61

    def test_cached_bundle(self):
        """The process-wide loader returns one shared bundle"""
        assert get_lexicon_bundle() is get_lexicon_bundle()


class TestTemplates:
    """Test suite for pattern template parsing"""

    def test_hollow_slot(self):
        slots = parse_template('ن1ت2~3')

        assert len(slots) == 5
        assert slots[3].position == 2
        assert slots[3].hollow

    def test_pattern_properties(self):
        pattern = PatternEntry('است123', 'verb', name='استفعل')

        assert pattern.arity == 3
        assert pattern.length == 6
        assert pattern.literal_count == 3
        assert pattern.label == 'استفعل'

    def test_hollow_slot_counts_as_fixed_letter(self):
        assert PatternEntry('است12~3', 'verb').fixed_letters == 4
        assert PatternEntry('ا1ت23', 'verb').fixed_letters == 2

    def test_alef_folded_literals(self):
        folded = PatternEntry('أ12ا3', 'noun').alef_folded()

        assert ''.join(s.literal for s in folded.slots if not s.position) == 'اا'
        assert folded.template == 'أ12ا3'

    @pytest.mark.parametrize("template", ['~123', '132', '12', '1~~23'])
    def test_rejects_bad_templates(self, template):
        """Stray hollow marks, unordered slots or too few slots"""
        with pytest.raises(ValueError):
            parse_template(template)


class TestMemoTables:
    """Test suite for the bounded per-bundle memo tables"""

    def test_evicts_least_recent(self):
        table = MemoTable(2)
        table['a'] = 1
        table['b'] = 2
        table.get('a')
        table['c'] = 3

        assert 'a' in table and 'c' in table
        assert 'b' not in table
        assert len(table) == 2

    def test_bundle_tables_are_capped(self, bundle):
        small = replace(bundle, memo_size=3)
        analyze_text("ذهب الطلاب إلى المدارس الحكومية في المدن الكبيرة", small)

        assert small.memo('analyses').maxsize == 3
        assert 0 < len(small.memo('analyses')) <= 3
        assert len(small.memo('segmentations')) <= 3

    def test_loader_sets_memo_size(self):
        assert load_bundle(memo_size=5).memo('x').maxsize == 5


class TestLoaderErrors:
    """Test suite for resource and parse errors"""

    def test_missing_directory(self, tmp_path):
        with pytest.raises(ResourceError) as exc:
            load_bundle(tmp_path / 'nowhere')
        assert 'nowhere' in exc.value.path

    def test_missing_required_file(self, lexicon_copy):
        (lexicon_copy / 'patterns.tsv').unlink()

        with pytest.raises(ResourceError) as exc:
            LexiconDatabase(lexicon_copy)
        assert exc.value.path.endswith('patterns.tsv')

    def test_quad_roots_are_optional(self, lexicon_copy):
        """roots_quad.tsv may be absent"""
        (lexicon_copy / 'roots_quad.tsv').unlink()

        bundle = load_bundle(lexicon_copy)
        assert bundle.quad_roots == frozenset()

    def test_duplicate_closed_word(self, lexicon_copy):
        """The error names the file and the duplicate's line"""
        path = lexicon_copy / 'closed_words.tsv'
        line_count = len(path.read_text(encoding='utf-8').splitlines())
        append_line(path, "في\tpreposition\tnoun")

        with pytest.raises(LexiconParseError) as exc:
            load_bundle(lexicon_copy)
        assert exc.value.filename == 'closed_words.tsv'
        assert exc.value.line_no == line_count + 1

    def test_unknown_closed_group(self, lexicon_copy):
        append_line(lexicon_copy / 'closed_words.tsv', "هلا\tinterjection\t-")

        with pytest.raises(LexiconParseError, match="unknown group"):
            load_bundle(lexicon_copy)

    def test_bad_next_word_hint(self, lexicon_copy):
        append_line(lexicon_copy / 'closed_words.tsv', "هلا\tnegation\tadjective")

        with pytest.raises(LexiconParseError, match="hint"):
            load_bundle(lexicon_copy)

    def test_unnormalized_entry(self, lexicon_copy):
        """Lexicon entries must already be free of diacritics"""
        append_line(lexicon_copy / 'proper_nouns.tsv', "دِمَشْق")

        with pytest.raises(LexiconParseError, match="not normalized"):
            load_bundle(lexicon_copy)

    def test_duplicate_root_after_canonicalization(self, lexicon_copy):
        """Two hamza spellings of one root are a duplicate"""
        append_line(lexicon_copy / 'roots_tri.tsv', "نشئ")

        with pytest.raises(LexiconParseError, match="duplicate"):
            load_bundle(lexicon_copy)

    def test_bad_root_length(self, lexicon_copy):
        append_line(lexicon_copy / 'roots_tri.tsv', "كتبب")

        with pytest.raises(LexiconParseError, match="3-letter root"):
            load_bundle(lexicon_copy)

    def test_bad_pattern_class(self, lexicon_copy):
        append_line(lexicon_copy / 'patterns.tsv', "مفا123\tadverb\t-\t-\t-\t-")

        with pytest.raises(LexiconParseError, match="pattern class"):
            load_bundle(lexicon_copy)

    def test_definite_affix_must_be_noun_only(self, lexicon_copy):
        append_line(lexicon_copy / 'prefixes.tsv', "وال\teither\tdefinite\t2")

        with pytest.raises(LexiconParseError, match="noun-only"):
            load_bundle(lexicon_copy)

    def test_unknown_lemma_template(self, lexicon_copy):
        append_line(lexicon_copy / 'verb_lemma_map.tsv', "ي12345\t123")

        with pytest.raises(ConsistencyError, match="unknown template"):
            load_bundle(lexicon_copy)

    def test_lemma_template_arity_mismatch(self, lexicon_copy):
        append_line(lexicon_copy / 'verb_lemma_map.tsv', "ان123\tت1234")

        with pytest.raises(ConsistencyError, match="arity"):
            load_bundle(lexicon_copy)

    def test_broken_plural_to_invalid_word(self, lexicon_copy):
        append_line(lexicon_copy / 'broken_plurals.tsv', "كتب\tbook")

        with pytest.raises((ConsistencyError, LexiconParseError)):
            load_bundle(lexicon_copy)
