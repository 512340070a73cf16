"""
Exception hierarchy shared by every qamar module
"""

from typing import Optional


class QamarError(Exception):
    """Base class for all qamar errors"""


class ResourceError(QamarError, FileNotFoundError):
    """A lexicon directory or file is missing"""

    def __init__(self, path, message: Optional[str] = None):
        self.path = str(path)
        super().__init__(message or f"Lexicon resource not found: {self.path}")


class LexiconParseError(QamarError, ValueError):
    """A lexicon line could not be parsed"""

    def __init__(self, filename: str, line_no: int, reason: str):
        self.filename = filename
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"{filename}:{line_no}: {reason}")


class ConsistencyError(QamarError):
    """Lexicon files disagree with each other"""


class ContractViolation(QamarError, ValueError):
    """A function was called outside its precondition"""


class AlignmentError(QamarError, ValueError):
    """Predictions and gold records do not line up"""

    def __init__(self, position: int, message: str):
        self.position = position
        super().__init__(f"position {position}: {message}")


class GoldParseError(LexiconParseError):
    """A gold or tagged annotation line could not be parsed"""
