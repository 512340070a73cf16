"""
Pytest configuration and fixtures
"""
import json
import shutil
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from qamar.config import CORPORA_DIR, DEFAULT_LEXICON_DIR  # noqa: E402
from qamar.data_loaders.lexicon_db import load_bundle  # noqa: E402
from qamar.tagging.types import Analysis, Category, Features  # noqa: E402
from qamar.text.tokenizer import Token, TokenKind  # noqa: E402


@pytest.fixture(scope="session")
def bundle():
    """Seed lexicon bundle, loaded once per test session"""
    return load_bundle(DEFAULT_LEXICON_DIR)


@pytest.fixture(scope="session")
def corpora_dir():
    return CORPORA_DIR


@pytest.fixture(scope="session")
def golden():
    """Pinned figures for the bundled passages"""
    with open(CORPORA_DIR / 'golden.json', encoding='utf-8') as f:
        return json.load(f)


@pytest.fixture(scope="session")
def education_text():
    return (CORPORA_DIR / 'education.txt').read_text(encoding='utf-8')


@pytest.fixture(scope="session")
def technical_text():
    return (CORPORA_DIR / 'technical.txt').read_text(encoding='utf-8')


@pytest.fixture
def lexicon_copy(tmp_path):
    """Writable copy of the seed lexicon for fault injection"""
    target = tmp_path / 'lexicon'
    shutil.copytree(DEFAULT_LEXICON_DIR, target)
    return target


def append_line(path: Path, line: str) -> None:
    """Append one line to a lexicon file"""
    with open(path, 'a', encoding='utf-8') as f:
        f.write(line + '\n')


def make_token(surface: str, kind: TokenKind = TokenKind.WORD) -> Token:
    return Token(surface, surface, (0, len(surface)), kind)


def make_analysis(surface: str, category: Category, features: Features = None,
                  lemma: str = None, kind: TokenKind = TokenKind.WORD) -> Analysis:
    """Hand-built analysis for rule and metric tests"""
    return Analysis(
        token=make_token(surface, kind),
        category=category,
        features=features if features is not None else Features(),
        lemma=lemma if lemma is not None else surface,
    )
