"""
Arabic Text Normalizer
Strips short-vowel diacritics and tatweel, with optional orthographic folding
"""

import re
import unicodedata
from typing import Union

# fathatan .. sukun, the extended vowel marks up to U+065F, superscript alef
DIACRITICS_PATTERN = re.compile(r'[\u064B-\u065F\u0670]')

TATWEEL = '\u0640'

ALEF_VARIANTS_PATTERN = re.compile(r'[إأآٱ]')
ALEF = 'ا'

ALEF_MAKSURA = 'ى'
YEH = 'ي'

ARABIC_LETTER_PATTERN = re.compile(r'^[\u0621-\u063A\u0641-\u064A\u0671]+$')


def strip_diacritics(text: str) -> str:
    """Drop vowel marks after composing combining madda and hamza onto their letters"""
    return DIACRITICS_PATTERN.sub('', unicodedata.normalize('NFC', text))


def strip_tatweel(text: str) -> str:
    return text.replace(TATWEEL, '')


def fold_alef(text: str) -> str:
    """Map hamzated / madda / wasla alef forms to bare alef"""
    return ALEF_VARIANTS_PATTERN.sub(ALEF, text)


def fold_yeh(text: str) -> str:
    return text.replace(ALEF_MAKSURA, YEH)


def normalize(raw: Union[str, bytes], fold_alef: bool = False, fold_yeh: bool = False) -> str:
    """
    Normalize raw Arabic text

    Removes fatha, damma, kasra, sukun, shadda, tanween, the rarer vowel
    marks (U+0653..U+065F, superscript alef) and tatweel. A combining
    madda or hamza is first composed with its letter, so ا + U+0653
    becomes آ. Every other character is kept in order, so the function
    is idempotent.

    Args:
        raw: Text, or UTF-8 bytes (decoded strictly)
        fold_alef: Also map أ إ آ ٱ to ا
        fold_yeh: Also map ى to ي

    Returns:
        Normalized text

    Raises:
        UnicodeDecodeError: bytes input is not valid UTF-8
    """
    text = raw.decode('utf-8') if isinstance(raw, bytes) else raw
    text = strip_tatweel(strip_diacritics(text))
    if fold_alef:
        text = ALEF_VARIANTS_PATTERN.sub(ALEF, text)
    if fold_yeh:
        text = text.replace(ALEF_MAKSURA, YEH)
    return text


def is_arabic_word(surface: str) -> bool:
    """True iff every character is an Arabic letter"""
    return bool(ARABIC_LETTER_PATTERN.match(surface))
