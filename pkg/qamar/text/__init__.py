"""Text normalization and tokenization"""
from qamar.text.normalizer import normalize, fold_alef, fold_yeh, is_arabic_word
from qamar.text.tokenizer import Token, TokenKind, tokenize

__all__ = ['normalize', 'fold_alef', 'fold_yeh', 'is_arabic_word', 'Token', 'TokenKind', 'tokenize']
