"""
Lexicon Database Loader
Loads, validates and caches the TSV dictionaries the tagger consults
"""

import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Tuple

from qamar.config import Config, DEFAULT_LEXICON_DIR
from qamar.errors import ConsistencyError, LexiconParseError, ResourceError
from qamar.text.normalizer import fold_alef, is_arabic_word, normalize

logger = logging.getLogger(__name__)

NOUN = 'noun'
VERB = 'verb'
EITHER = 'either'
GENERAL = 'general'

AFFIX_CLASSES = (NOUN, VERB, EITHER)
PATTERN_CLASSES = (VERB, NOUN, GENERAL)
HINTS = (NOUN, VERB)
ASPECTS = ('perfective', 'imperfective')
VOICES = ('active', 'passive')

CLOSED_WORDS_FILE = 'closed_words.tsv'
PROPER_NOUNS_FILE = 'proper_nouns.tsv'
TRI_ROOTS_FILE = 'roots_tri.tsv'
QUAD_ROOTS_FILE = 'roots_quad.tsv'
PATTERNS_FILE = 'patterns.tsv'
PREFIXES_FILE = 'prefixes.tsv'
SUFFIXES_FILE = 'suffixes.tsv'
THIRD_CLASS_VERBS_FILE = 'verbs_third_class.tsv'
FEMININE_FILE = 'feminine_singular.tsv'
BROKEN_PLURALS_FILE = 'broken_plurals.tsv'
VERB_LEMMA_MAP_FILE = 'verb_lemma_map.tsv'

REQUIRED_FILES = (
    CLOSED_WORDS_FILE, PROPER_NOUNS_FILE, TRI_ROOTS_FILE, PATTERNS_FILE,
    PREFIXES_FILE, SUFFIXES_FILE, THIRD_CLASS_VERBS_FILE, FEMININE_FILE,
    BROKEN_PLURALS_FILE, VERB_LEMMA_MAP_FILE,
)

GROUPS_HEADER = '#@groups='

# hamza seats and alef maksura collapse so root lists need one spelling
_ROOT_CANON = str.maketrans({
    'أ': 'ء', 'إ': 'ء', 'ؤ': 'ء', 'ئ': 'ء', 'آ': 'ء', 'ى': 'ي',
})


def canonical_root(root: str) -> str:
    """Hamza-canonical spelling used for root membership"""
    return root.translate(_ROOT_CANON)


def lookup_key(word: str) -> str:
    """Alef-folded key for the verb, feminine and broken-plural dictionaries"""
    return fold_alef(word)


class TemplateSlot(NamedTuple):
    """One template position: a literal letter, or a root slot (position > 0)"""
    literal: str
    position: int
    hollow: bool


def parse_template(template: str) -> Tuple[TemplateSlot, ...]:
    """
    Parse a pattern template such as 'است123' or 'ن1ت2~3'

    Raises:
        ValueError: slots out of order, repeated, or a stray '~'
    """
    slots: List[TemplateSlot] = []
    for char in template:
        if char == '~':
            if not slots or slots[-1].position == 0 or slots[-1].hollow:
                raise ValueError(f"'~' must follow a root slot in {template!r}")
            slots[-1] = slots[-1]._replace(hollow=True)
        elif char in '1234':
            slots.append(TemplateSlot('', int(char), False))
        else:
            slots.append(TemplateSlot(char, 0, False))

    positions = [s.position for s in slots if s.position]
    if positions != list(range(1, len(positions) + 1)):
        raise ValueError(f"root slots must read 1..n in order in {template!r}")
    if len(positions) < 3:
        raise ValueError(f"template {template!r} has fewer than 3 root slots")
    return tuple(slots)


class MemoTable:
    """Least-recently-used memo holding at most `maxsize` entries"""

    def __init__(self, maxsize: int):
        self.maxsize = maxsize
        self._entries: OrderedDict = OrderedDict()
        self._lock = threading.Lock()

    def get(self, key, default=None):
        with self._lock:
            if key not in self._entries:
                return default
            self._entries.move_to_end(key)
            return self._entries[key]

    def __setitem__(self, key, value):
        with self._lock:
            self._entries[key] = value
            self._entries.move_to_end(key)
            while len(self._entries) > self.maxsize:
                self._entries.popitem(last=False)

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)


@dataclass(frozen=True)
class ClosedWordEntry:
    surface: str
    subcategory: str
    next_word_hint: Optional[str] = None


@dataclass(frozen=True)
class PatternEntry:
    """
    A templatic form with its class and optional verb lemma template

    Templates are written with digits for root positions; '~' after a
    digit marks a hollow slot whose surface letter is ا while the root
    letter is و or ي.
    """
    template: str
    pattern_class: str
    lemma_template: Optional[str] = None
    name: str = ''
    aspect: Optional[str] = None
    voice: Optional[str] = None
    order: int = 0
    slots: Tuple[TemplateSlot, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'slots', parse_template(self.template))

    @property
    def arity(self) -> int:
        return sum(1 for s in self.slots if s.position)

    @property
    def length(self) -> int:
        """Surface length of any stem built from this template"""
        return len(self.slots)

    @property
    def literal_count(self) -> int:
        return sum(1 for s in self.slots if not s.position)

    @property
    def fixed_letters(self) -> int:
        """Surface letters the template pins down, hollow slots included"""
        return sum(1 for s in self.slots if not s.position or s.hollow)

    def alef_folded(self) -> 'PatternEntry':
        """Copy whose literal letters are alef-folded"""
        folded = replace(self)
        object.__setattr__(folded, 'slots', tuple(
            s._replace(literal=fold_alef(s.literal)) for s in self.slots))
        return folded

    @property
    def label(self) -> str:
        return self.name or self.template


@dataclass(frozen=True)
class AffixEntry:
    surface: str
    position: str
    affix_class: str
    features: FrozenSet[str] = frozenset()
    min_stem: int = 2
    order: int = 0

    def has(self, feature: str) -> bool:
        return feature in self.features

    @property
    def is_proclitic(self) -> bool:
        return 'proclitic' in self.features

    @property
    def is_definite(self) -> bool:
        return 'definite' in self.features


@dataclass(frozen=True)
class LexiconBundle:
    """
    Every dictionary resource, loaded once and shared read-only

    Root sets hold hamza-canonical spellings; the verb, feminine and
    broken-plural dictionaries are keyed by alef-folded forms.
    """
    closed_words: Dict[str, ClosedWordEntry]
    closed_groups: Tuple[str, ...]
    proper_nouns: FrozenSet[str]
    tri_roots: FrozenSet[str]
    quad_roots: FrozenSet[str]
    patterns: Tuple[PatternEntry, ...]
    prefixes: Tuple[AffixEntry, ...]
    suffixes: Tuple[AffixEntry, ...]
    third_class_verbs: FrozenSet[str]
    feminine_singulars: FrozenSet[str]
    broken_plural_map: Dict[str, str]
    verb_lemma_map: Dict[str, str]
    enable_quad_roots: bool = True
    min_stem_length: int = Config.MIN_STEM_LENGTH
    memo_size: int = Config.MEMO_SIZE
    alef_folded: bool = False
    # memo tables for stem analyses; never part of equality
    _memo: Dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def lookup_closed(self, surface: str) -> Optional[ClosedWordEntry]:
        return self.closed_words.get(surface)

    def is_proper_noun(self, surface: str) -> bool:
        return surface in self.proper_nouns

    def is_root(self, root: str) -> bool:
        key = canonical_root(root)
        if len(key) == 3:
            return key in self.tri_roots
        if len(key) == 4 and self.enable_quad_roots:
            return key in self.quad_roots
        return False

    def is_third_class_verb(self, stem: str) -> bool:
        return lookup_key(stem) in self.third_class_verbs

    def is_feminine_singular(self, word: str) -> bool:
        return lookup_key(word) in self.feminine_singulars

    def singular_of(self, plural: str) -> Optional[str]:
        return self.broken_plural_map.get(lookup_key(plural))

    def prefix(self, surface: str) -> Optional[AffixEntry]:
        for entry in self.prefixes:
            if entry.surface == surface:
                return entry
        return None

    @property
    def proclitics(self) -> Tuple[AffixEntry, ...]:
        return tuple(p for p in self.prefixes if p.is_proclitic)

    def pattern_by_template(self, template: str) -> Optional[PatternEntry]:
        index = self._memo.get('templates')
        if index is None:
            index = {p.template: p for p in self.patterns}
            self._memo['templates'] = index
        return index.get(template)

    def patterns_of_length(self, length: int) -> Tuple[PatternEntry, ...]:
        index = self._memo.get('lengths')
        if index is None:
            grouped: Dict[int, List[PatternEntry]] = {}
            for pattern in self.patterns:
                grouped.setdefault(pattern.length, []).append(pattern)
            index = {n: tuple(ps) for n, ps in grouped.items()}
            self._memo['lengths'] = index
        return index.get(length, ())

    def memo(self, table: str) -> MemoTable:
        """Named LRU memo table owned by this bundle, capped at memo_size entries"""
        return self._memo.setdefault(table, MemoTable(self.memo_size))

    def folded(self) -> 'LexiconBundle':
        """
        View of this bundle for alef-folded text

        Closed-word and proper-noun keys and pattern literals are folded
        the way the tokenizer folds surfaces. The view is built once and
        kept on the bundle.
        """
        if self.alef_folded:
            return self
        view = self._memo.get('folded')
        if view is None:
            closed: Dict[str, ClosedWordEntry] = {}
            for surface, entry in self.closed_words.items():
                closed.setdefault(fold_alef(surface), entry)
            view = replace(
                self,
                closed_words=closed,
                proper_nouns=frozenset(fold_alef(w) for w in self.proper_nouns),
                patterns=tuple(p.alef_folded() for p in self.patterns),
                prefixes=tuple(replace(a, surface=fold_alef(a.surface)) for a in self.prefixes),
                suffixes=tuple(replace(a, surface=fold_alef(a.surface)) for a in self.suffixes),
                alef_folded=True,
            )
            self._memo['folded'] = view
        return view

    def counts(self) -> Dict[str, int]:
        return {
            'closed_words': len(self.closed_words),
            'closed_groups': len(self.closed_groups),
            'proper_nouns': len(self.proper_nouns),
            'tri_roots': len(self.tri_roots),
            'quad_roots': len(self.quad_roots),
            'patterns': len(self.patterns),
            'prefixes': len(self.prefixes),
            'suffixes': len(self.suffixes),
            'third_class_verbs': len(self.third_class_verbs),
            'feminine_singulars': len(self.feminine_singulars),
            'broken_plurals': len(self.broken_plural_map),
            'verb_lemma_map': len(self.verb_lemma_map),
        }

    def minimal(self) -> 'LexiconBundle':
        """
        Minimum-resource copy: closed words and affix tables only

        Patterns, roots, proper nouns and the verb and broken-plural
        dictionaries are emptied, so every open-class word falls through
        to the affix and context rules.
        """
        return replace(
            self,
            proper_nouns=frozenset(),
            tri_roots=frozenset(),
            quad_roots=frozenset(),
            patterns=(),
            third_class_verbs=frozenset(),
            broken_plural_map={},
            verb_lemma_map={},
        )


class LexiconDatabase:
    """Lexicon directory reader with per-file parsing and validation"""

    def __init__(self, data_dir: Optional[str] = None, enable_quad_roots: bool = True):
        """
        Initialize database loader

        Args:
            data_dir: Directory containing the TSV files
                     If None, uses the bundled qamar/data/lexicon
            enable_quad_roots: Read roots_quad.tsv when present
        """
        if data_dir is None:
            data_dir = DEFAULT_LEXICON_DIR

        self.data_dir = Path(data_dir)
        self.enable_quad_roots = enable_quad_roots

        if not self.data_dir.is_dir():
            raise ResourceError(self.data_dir, f"Lexicon directory not found: {self.data_dir}")

        for filename in REQUIRED_FILES:
            if not (self.data_dir / filename).is_file():
                raise ResourceError(self.data_dir / filename)

    def _lines(self, filename: str) -> Iterator[Tuple[int, str]]:
        """Yield (line number, raw line) for every non-blank line"""
        path = self.data_dir / filename
        with open(path, 'r', encoding='utf-8') as f:
            for line_no, line in enumerate(f, start=1):
                line = line.rstrip('\n').rstrip('\r')
                if line.strip():
                    yield line_no, line

    def _rows(self, filename: str, min_cols: int, max_cols: int) -> Iterator[Tuple[int, List[str]]]:
        """Yield (line number, fields) for data lines; '-' fields become ''"""
        for line_no, line in self._lines(filename):
            if line.lstrip().startswith('#'):
                continue
            fields = [f.strip() for f in line.split('\t')]
            if not min_cols <= len(fields) <= max_cols:
                raise LexiconParseError(
                    filename, line_no,
                    f"expected {min_cols}-{max_cols} columns, got {len(fields)}")
            fields += [''] * (max_cols - len(fields))
            yield line_no, ['' if f == '-' else f for f in fields]

    @staticmethod
    def _word(filename: str, line_no: int, value: str) -> str:
        if not value:
            raise LexiconParseError(filename, line_no, "empty surface")
        if normalize(value) != value:
            raise LexiconParseError(filename, line_no, f"{value!r} is not normalized")
        return value

    def _word_list(self, filename: str) -> List[Tuple[int, str]]:
        return [(line_no, self._word(filename, line_no, fields[0]))
                for line_no, fields in self._rows(filename, 1, 2)]

    @staticmethod
    def _unique(filename: str, entries: List[Tuple[int, str]], key=lambda w: w) -> FrozenSet[str]:
        seen: Dict[str, int] = {}
        for line_no, word in entries:
            k = key(word)
            if k in seen:
                raise LexiconParseError(
                    filename, line_no, f"duplicate entry {word!r} (first on line {seen[k]})")
            seen[k] = line_no
        return frozenset(seen)

    def load_closed_words(self) -> Tuple[Dict[str, ClosedWordEntry], Tuple[str, ...]]:
        """
        Load closed-class words and their declared group inventory

        Returns:
            (surface → entry, group names in header order)
        """
        groups: Tuple[str, ...] = ()
        for line_no, line in self._lines(CLOSED_WORDS_FILE):
            if line.startswith(GROUPS_HEADER):
                groups = tuple(g.strip() for g in line[len(GROUPS_HEADER):].split(',') if g.strip())
                break
        if not groups:
            raise LexiconParseError(CLOSED_WORDS_FILE, 1, f"missing '{GROUPS_HEADER}' header")

        entries: Dict[str, ClosedWordEntry] = {}
        for line_no, (surface, subcategory, hint) in self._rows(CLOSED_WORDS_FILE, 2, 3):
            surface = self._word(CLOSED_WORDS_FILE, line_no, surface)
            if subcategory not in groups:
                raise LexiconParseError(CLOSED_WORDS_FILE, line_no, f"unknown group {subcategory!r}")
            if hint and hint not in HINTS:
                raise LexiconParseError(CLOSED_WORDS_FILE, line_no, f"bad next-word hint {hint!r}")
            if surface in entries:
                raise LexiconParseError(CLOSED_WORDS_FILE, line_no, f"duplicate closed word {surface!r}")
            entries[surface] = ClosedWordEntry(surface, subcategory, hint or None)
        return entries, groups

    def load_roots(self, filename: str, arity: int) -> FrozenSet[str]:
        entries = self._word_list(filename)
        for line_no, root in entries:
            if len(root) != arity or not is_arabic_word(root):
                raise LexiconParseError(filename, line_no, f"{root!r} is not a {arity}-letter root")
        return self._unique(filename, [(n, canonical_root(r)) for n, r in entries])

    def load_patterns(self) -> List[PatternEntry]:
        patterns = []
        seen: Dict[str, int] = {}
        rows = self._rows(PATTERNS_FILE, 2, 6)
        for order, (line_no, (template, cls, lemma, name, aspect, voice)) in enumerate(rows):
            if cls not in PATTERN_CLASSES:
                raise LexiconParseError(PATTERNS_FILE, line_no, f"unknown pattern class {cls!r}")
            if aspect and aspect not in ASPECTS:
                raise LexiconParseError(PATTERNS_FILE, line_no, f"unknown aspect {aspect!r}")
            if voice and voice not in VOICES:
                raise LexiconParseError(PATTERNS_FILE, line_no, f"unknown voice {voice!r}")
            if template in seen:
                raise LexiconParseError(PATTERNS_FILE, line_no, f"duplicate template {template!r}")
            try:
                pattern = PatternEntry(template, cls, lemma or None, name, aspect or None,
                                       voice or None, order)
            except ValueError as e:
                raise LexiconParseError(PATTERNS_FILE, line_no, str(e)) from e
            seen[template] = line_no
            patterns.append(pattern)
        return patterns

    def load_affixes(self, filename: str, position: str) -> List[AffixEntry]:
        affixes = []
        seen = set()
        for order, (line_no, (surface, cls, features, min_stem)) in enumerate(self._rows(filename, 2, 4)):
            surface = self._word(filename, line_no, surface)
            if cls not in AFFIX_CLASSES:
                raise LexiconParseError(filename, line_no, f"unknown affix class {cls!r}")
            if surface in seen:
                raise LexiconParseError(filename, line_no, f"duplicate affix {surface!r}")
            feature_set = frozenset(f.strip() for f in features.split(',') if f.strip())
            if 'definite' in feature_set and cls != NOUN:
                raise LexiconParseError(filename, line_no, "a definite affix must be noun-only")
            try:
                floor = int(min_stem) if min_stem else Config.MIN_STEM_LENGTH
            except ValueError as e:
                raise LexiconParseError(filename, line_no, f"bad min_stem {min_stem!r}") from e
            seen.add(surface)
            affixes.append(AffixEntry(surface, position, cls, feature_set,
                                      max(floor, Config.MIN_STEM_LENGTH), order))
        return affixes

    def load_broken_plurals(self) -> Dict[str, str]:
        mapping: Dict[str, str] = {}
        for line_no, (plural, singular) in self._rows(BROKEN_PLURALS_FILE, 2, 2):
            plural = self._word(BROKEN_PLURALS_FILE, line_no, plural)
            singular = self._word(BROKEN_PLURALS_FILE, line_no, singular)
            key = lookup_key(plural)
            if key in mapping:
                raise LexiconParseError(BROKEN_PLURALS_FILE, line_no, f"duplicate plural {plural!r}")
            mapping[key] = singular
        return mapping

    def load_verb_lemma_map(self) -> Dict[str, str]:
        mapping: Dict[str, str] = {}
        for line_no, (template, lemma_template) in self._rows(VERB_LEMMA_MAP_FILE, 2, 2):
            if template in mapping:
                raise LexiconParseError(VERB_LEMMA_MAP_FILE, line_no, f"duplicate template {template!r}")
            mapping[template] = lemma_template
        return mapping

    def build_bundle(self) -> LexiconBundle:
        """
        Parse every file and cross-validate them

        Raises:
            LexiconParseError: malformed or duplicate line
            ConsistencyError: files disagree with each other
        """
        closed_words, groups = self.load_closed_words()
        patterns = self.load_patterns()
        verb_lemma_map = self.load_verb_lemma_map()
        broken_plurals = self.load_broken_plurals()

        quad_roots: FrozenSet[str] = frozenset()
        if self.enable_quad_roots and (self.data_dir / QUAD_ROOTS_FILE).is_file():
            quad_roots = self.load_roots(QUAD_ROOTS_FILE, 4)

        patterns = _resolve_lemma_templates(patterns, verb_lemma_map)

        for plural_key, singular in broken_plurals.items():
            if not is_arabic_word(singular):
                raise ConsistencyError(f"broken plural {plural_key!r} maps to invalid word {singular!r}")

        bundle = LexiconBundle(
            closed_words=closed_words,
            closed_groups=groups,
            proper_nouns=self._unique(PROPER_NOUNS_FILE, self._word_list(PROPER_NOUNS_FILE)),
            tri_roots=self.load_roots(TRI_ROOTS_FILE, 3),
            quad_roots=quad_roots,
            patterns=tuple(patterns),
            prefixes=tuple(self.load_affixes(PREFIXES_FILE, 'prefix')),
            suffixes=tuple(self.load_affixes(SUFFIXES_FILE, 'suffix')),
            third_class_verbs=self._unique(
                THIRD_CLASS_VERBS_FILE, self._word_list(THIRD_CLASS_VERBS_FILE), key=lookup_key),
            feminine_singulars=self._unique(
                FEMININE_FILE, self._word_list(FEMININE_FILE), key=lookup_key),
            broken_plural_map=broken_plurals,
            verb_lemma_map=verb_lemma_map,
            enable_quad_roots=self.enable_quad_roots,
        )
        logger.info("Loaded lexicon bundle from %s: %s", self.data_dir, bundle.counts())
        return bundle


def _resolve_lemma_templates(patterns: List[PatternEntry],
                             verb_lemma_map: Dict[str, str]) -> List[PatternEntry]:
    """Attach verb_lemma_map targets to their patterns, checking arity"""
    by_template = {p.template: p for p in patterns}

    for template, lemma_template in verb_lemma_map.items():
        if template not in by_template:
            raise ConsistencyError(f"{VERB_LEMMA_MAP_FILE}: unknown template {template!r}")
        if lemma_template not in by_template:
            raise ConsistencyError(f"{VERB_LEMMA_MAP_FILE}: unknown lemma template {lemma_template!r}")

    resolved = []
    for pattern in patterns:
        declared = pattern.lemma_template
        mapped = verb_lemma_map.get(pattern.template)
        if declared and mapped and declared != mapped:
            raise ConsistencyError(
                f"{pattern.template!r}: {PATTERNS_FILE} says {declared!r}, "
                f"{VERB_LEMMA_MAP_FILE} says {mapped!r}")
        target = mapped or declared
        if target:
            if target not in by_template:
                raise ConsistencyError(f"{pattern.template!r}: unknown lemma template {target!r}")
            if by_template[target].arity != pattern.arity:
                raise ConsistencyError(
                    f"{pattern.template!r} and lemma template {target!r} differ in root arity")
            pattern = replace(pattern, lemma_template=target)
        resolved.append(pattern)
    return resolved


def load_bundle(directory=None, enable_quad_roots: bool = Config.ENABLE_QUAD_ROOTS,
                memo_size: int = Config.MEMO_SIZE) -> LexiconBundle:
    """
    Load a lexicon directory into an immutable bundle

    Args:
        directory: Lexicon directory (default: the bundled seed)
        enable_quad_roots: Consult roots_quad.tsv during root verification
        memo_size: Entry cap for each memo table on the bundle

    Returns:
        LexiconBundle

    Raises:
        ResourceError: directory or required file missing
        LexiconParseError: malformed line, with file and line number
        ConsistencyError: cross-file validation failed
    """
    bundle = LexiconDatabase(directory, enable_quad_roots).build_bundle()
    if memo_size != bundle.memo_size:
        bundle = replace(bundle, memo_size=memo_size)
    return bundle


@lru_cache(maxsize=8)
def get_lexicon_bundle(directory: Optional[str] = None) -> LexiconBundle:
    """Process-wide cached bundle per directory"""
    return load_bundle(directory or Config.LEXICON_DIR)


def lookup_closed(bundle: LexiconBundle, surface: str) -> Optional[ClosedWordEntry]:
    """Exact-match closed-word lookup"""
    return bundle.lookup_closed(surface)


def lookup_proper(bundle: LexiconBundle, surface: str) -> bool:
    """Exact-match proper-noun membership"""
    return bundle.is_proper_noun(surface)
