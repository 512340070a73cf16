"""
Test Suite for the qamar Arabic tagger and lemmatizer
"""
