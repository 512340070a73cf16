import os
from pathlib import Path

from dotenv import load_dotenv
load_dotenv()

DEFAULT_LEXICON_DIR = Path(__file__).parent / 'data' / 'lexicon'
CORPORA_DIR = Path(__file__).parent / 'data' / 'corpora'


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    LEXICON_DIR = os.getenv('QAMAR_LEXICON_DIR', str(DEFAULT_LEXICON_DIR))
    FOLD_ALEF = _flag('QAMAR_FOLD_ALEF', '0')
    ENABLE_QUAD_ROOTS = _flag('QAMAR_ENABLE_QUAD_ROOTS', '1')
    MIN_STEM_LENGTH = 2
    WORKERS = int(os.getenv('QAMAR_WORKERS', '1'))
    MEMO_SIZE = int(os.getenv('QAMAR_MEMO_SIZE', '50000'))
    LOG_LEVEL = os.getenv('QAMAR_LOG_LEVEL', 'WARNING')


class DevelopmentConfig(Config):
    LOG_LEVEL = 'DEBUG'


class TestingConfig(Config):
    LEXICON_DIR = str(DEFAULT_LEXICON_DIR)
    WORKERS = 1
    MEMO_SIZE = 1000
