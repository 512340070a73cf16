"""
Unit tests for the Arabic text normalizer
"""
import pytest

from qamar.text.normalizer import fold_alef, fold_yeh, is_arabic_word, normalize, strip_diacritics


class TestNormalize:
    """Test suite for diacritic and tatweel removal"""

    def test_strips_tanween(self):
        """Tanween fath is removed"""
        assert normalize("تقدمًا") == "تقدما"

    def test_strips_full_vocalization(self):
        """Every short vowel, shadda and sukun is removed"""
        assert normalize("كَتَبَ") == "كتب"
        assert normalize("مُدَرِّسٌ") == "مدرس"

    def test_strips_tatweel(self):
        """Tatweel carries no letter"""
        assert normalize("كـــتاب") == "كتاب"

    def test_keeps_other_characters(self):
        """Digits, Latin letters and punctuation pass through in order"""
        assert normalize("عام 1990.") == "عام 1990."
        assert normalize("abc") == "abc"

    def test_idempotent(self):
        """Normalizing twice changes nothing"""
        raw = "وَالْبُنُوكُ ـ الإهمال"
        assert normalize(normalize(raw)) == normalize(raw)

    def test_alef_folding_is_optional(self):
        """Hamzated alefs survive unless folding is requested"""
        assert normalize("إنشاء") == "إنشاء"
        assert normalize("إنشاء", fold_alef=True) == "انشاء"
        assert fold_alef("الآن") == "الان"

    def test_yeh_folding(self):
        """Alef maksura folds to yeh on request"""
        assert normalize("مبنى", fold_yeh=True) == "مبني"
        assert fold_yeh("على") == "علي"

    def test_bytes_input(self):
        """UTF-8 bytes are decoded before normalization"""
        assert normalize("كِتَاب".encode('utf-8')) == "كتاب"

    def test_invalid_bytes(self):
        """Invalid UTF-8 raises instead of being replaced"""
        with pytest.raises(UnicodeDecodeError):
            normalize(b'\xff\xfe\xfa')

    def test_strip_diacritics_alone(self):
        assert strip_diacritics("عَرَبِيّ") == "عربي"

    def test_composes_combining_madda(self):
        """Alef followed by combining madda becomes alef madda"""
        assert normalize("\u0627\u0653") == "آ"
        assert normalize("\u0627\u0653", fold_alef=True) == "ا"

    def test_strips_superscript_alef(self):
        assert normalize("هٰذا") == "هذا"

    @pytest.mark.parametrize("mark", ['\u0655', '\u0656', '\u0657', '\u065C', '\u065F'])
    def test_strips_extended_vowel_marks(self, mark):
        assert normalize("كت" + mark + "ب") == "كتب"
        assert normalize(normalize("كت" + mark + "ب")) == "كتب"


class TestIsArabicWord:
    """Test suite for the Arabic-letters check"""

    def test_arabic_word(self):
        assert is_arabic_word("العراق")

    def test_latin_and_digits(self):
        """Non-Arabic and mixed surfaces are rejected"""
        assert not is_arabic_word("computer")
        assert not is_arabic_word("2003م")
        assert not is_arabic_word("")
