"""
Arabic Tokenizer
Splits raw text into word, number and punctuation tokens with source spans
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from qamar.text.normalizer import normalize


class TokenKind(str, Enum):
    WORD = 'word'
    NUMBER = 'number'
    PUNCT = 'punctuation'


@dataclass(frozen=True)
class Token:
    """
    One token of the input

    surface is the normalized form used for every lookup; original is the
    raw slice text[span[0]:span[1]].
    """
    surface: str
    original: str
    span: Tuple[int, int]
    kind: TokenKind

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


_KIND_BY_GROUP = {
    'number': TokenKind.NUMBER,
    'word': TokenKind.WORD,
    'punct': TokenKind.PUNCT,
}

# harakat, quranic annotation marks and tatweel travel with the word they decorate
_WORD_MARKS = '\u0610-\u061A\u064B-\u065F\u0670\u06D6-\u06ED\u0640'

TOKEN_PATTERN = re.compile(
    r'(?P<number>\d+(?:[.,\u066B\u066C]\d+)*[مه]?(?!\w))'
    r'|(?P<word>[\w' + _WORD_MARKS + r']+)'
    r'|(?P<punct>[^\w\s])'
)


def tokenize(text: str, fold_alef: bool = False) -> List[Token]:
    """
    Segment raw text into tokens

    Whitespace separates tokens and is never part of one. Every other
    character lands in exactly one token, except tokens that normalize to
    nothing (a stray tatweel), which are dropped.

    Args:
        text: Raw text; diacritics are allowed and kept in Token.original
        fold_alef: Fold alef variants in Token.surface

    Returns:
        Tokens in source order
    """
    tokens = []
    for match in TOKEN_PATTERN.finditer(text):
        original = match.group(0)
        surface = normalize(original, fold_alef=fold_alef)
        if not surface:
            continue
        tokens.append(Token(
            surface=surface,
            original=original,
            span=match.span(),
            kind=_KIND_BY_GROUP[match.lastgroup],
        ))
    return tokens
