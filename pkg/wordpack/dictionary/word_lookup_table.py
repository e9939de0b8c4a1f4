import logging
import string
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction

from wordpack.dictionary.alphabet import (
    MAX_SURFACE_LENGTH,
    PUNCTUATION_SYMBOLS,
    WORD_CHARACTERS,
    is_word,
)
from wordpack.dictionary.reserved import RESERVED_BASE, RESERVED_TOKENS, is_reserved_band
from wordpack.utils.errors import CapacityError, InvalidWordError
from wordpack.utils.fnv import fnv1a_64

logger = logging.getLogger(__name__)

MAX_ENTRIES = RESERVED_BASE
OTHER_BUCKET = "OTHER"
BUCKET_NAMES = tuple(string.ascii_lowercase) + (OTHER_BUCKET,)
PUNCTUATION_ENTRY_COUNT = 2 * len(PUNCTUATION_SYMBOLS)


@dataclass(frozen=True)
class DictEntry:
    code: int
    surface: str
    trailing_space: bool = True

    @property
    def is_punctuation(self):
        return self.code < PUNCTUATION_ENTRY_COUNT

    @property
    def key(self):
        return self.surface, self.trailing_space


def bucket_name(surface):
    first = surface[:1]
    return first if first and first in string.ascii_lowercase else OTHER_BUCKET


def punctuation_entries():
    """
    The fixed punctuation block: two entries per symbol, with trailing space first.
    Returns:
      list: 54 DictEntry objects with codes 0..53.
    Examples:
      >>> punctuation_entries()[1]
      DictEntry(code=1, surface='.', trailing_space=False)
    """
    entries = []
    for symbol in PUNCTUATION_SYMBOLS:
        for trailing_space in (True, False):
            entries.append(DictEntry(len(entries), symbol, trailing_space))
    return entries


def canonical_wordlist(entries):
    return "\n".join(
        f"{entry.surface}\t{int(entry.trailing_space)}" for entry in entries
    ).encode("ascii")


@dataclass(frozen=True, eq=False)
class Dictionary:
    """
    The word lookup table: dense codes from 0, first-character buckets and a digest.

    Lookups select the bucket of the first character and binary-search it; the
    reserved band at the top of the address space is answered without touching
    the entries.
    """

    entries: tuple
    buckets: dict = field(repr=False)
    digest: int
    _bucket_keys: dict = field(repr=False)

    @classmethod
    def from_entries(cls, entries):
        entries = tuple(entries)
        grouped = {name: [] for name in BUCKET_NAMES}
        for entry in entries:
            grouped[bucket_name(entry.surface)].append(entry)
        buckets = {}
        bucket_keys = {}
        for name, members in grouped.items():
            members.sort(key=lambda entry: entry.key)
            buckets[name] = tuple(members)
            bucket_keys[name] = [entry.key for entry in members]
        digest = fnv1a_64(canonical_wordlist(entries))
        return cls(entries, buckets, digest, bucket_keys)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Dictionary):
            return NotImplemented
        return self.digest == other.digest and self.entries == other.entries

    def __hash__(self):
        return hash(self.digest)

    def lookup_code(self, surface, trailing_space=True):
        """
        Finds the code of a lowercase surface.
        Args:
          surface (str): Lowercase word or punctuation symbol.
          trailing_space (bool, optional): Punctuation variant flag. Defaults to True.
        Returns:
          int or None: The code, or None when the surface is absent.
        """
        name = bucket_name(surface)
        keys = self._bucket_keys[name]
        key = (surface, trailing_space)
        index = bisect_left(keys, key)
        if index < len(keys) and keys[index] == key:
            return self.buckets[name][index].code
        return None

    def lookup_surface(self, code):
        """
        Resolves a 19-bit code.
        Returns:
          DictEntry, ReservedToken or None: None for unassigned codes, including
          the unassigned part of the reserved band.
        """
        if is_reserved_band(code):
            return RESERVED_TOKENS.get(code)
        if 0 <= code < len(self.entries):
            return self.entries[code]
        return None

    @property
    def word_entries(self):
        return self.entries[PUNCTUATION_ENTRY_COUNT:]

    @cached_property
    def longest_word(self):
        return max((len(entry.surface) for entry in self.word_entries), default=0)

    @property
    def average_word_length(self):
        words = self.word_entries
        if not words:
            return None
        return Fraction(sum(len(entry.surface) for entry in words), len(words))

    def bucket_histogram(self):
        return {name: len(members) for name, members in self.buckets.items()}


def validate_word(word, line_number=None):
    if not word or len(word) > MAX_SURFACE_LENGTH:
        raise InvalidWordError(word, line_number)
    for char in word:
        if char not in WORD_CHARACTERS:
            raise InvalidWordError(word, line_number, char)
    if not is_word(word):
        raise InvalidWordError(word, line_number)


def build_dictionary(wordlist):
    """
    Builds a dictionary from wordlist lines.
    Args:
      wordlist (iterable): Lines of text, one word per line. Blank lines and
        lines starting with "#" are skipped; duplicates are dropped.
    Returns:
      Dictionary: The punctuation block (codes 0..53) followed by the words in
      first-seen order.
    Raises:
      InvalidWordError: If a word has a character outside the literal alphabet
        or is not a letters/apostrophe/hyphen word. Carries the line number.
      CapacityError: If the table would exceed 2**19 - 256 entries.
    Examples:
      >>> d = build_dictionary(["and", "a", "and"])
      >>> len(d), d.lookup_code("and"), d.lookup_code("a")
      (56, 54, 55)
    """
    entries = punctuation_entries()
    seen = set()
    for line_number, line in enumerate(wordlist, start=1):
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        word = word.lower()
        validate_word(word, line_number)
        if word in seen:
            continue
        if len(entries) >= MAX_ENTRIES:
            raise CapacityError(
                f"line {line_number}: dictionary is full at {MAX_ENTRIES} entries"
            )
        seen.add(word)
        entries.append(DictEntry(len(entries), word, True))
    logger.debug("built dictionary with %d entries", len(entries))
    return Dictionary.from_entries(entries)


def lookup_code(dictionary, surface, trailing_space=True):
    return dictionary.lookup_code(surface, trailing_space)


def lookup_surface(dictionary, code):
    return dictionary.lookup_surface(code)
