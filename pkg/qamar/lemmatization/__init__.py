"""Lemma generation"""

from qamar.lemmatization.lemma_generator import LemmaMethod, LemmaResult, lemmatize, noun_lemma, verb_lemma

__all__ = ['LemmaMethod', 'LemmaResult', 'lemmatize', 'noun_lemma', 'verb_lemma']
