"""
The 6-bit literal alphabet and the punctuation alphabet.

Code 0 is the `000000` terminator; 1..26 are 'a'..'z', 27..36 are '0'..'9'
and 37..63 are the punctuation symbols below, in order.
"""
import re
import string

TERMINATOR = 0
CHAR_WIDTH = 6

PUNCTUATION_SYMBOLS = ".,;:!?'\"-()[]{}/\\@#$%&*+=_~"
SENTENCE_ENDINGS = frozenset(".!?")

LITERAL_ALPHABET = string.ascii_lowercase + string.digits + PUNCTUATION_SYMBOLS

_CHAR_TO_CODE = {char: code for code, char in enumerate(LITERAL_ALPHABET, start=1)}

MAX_SURFACE_LENGTH = 64

# A word is a letter run with single inner apostrophes or hyphens: "don't", "sun-bath"
WORD_PATTERN = r"[A-Za-z]+(?:['-][A-Za-z]+)*"
WORD_RE = re.compile(WORD_PATTERN)
WORD_BYTES_RE = re.compile(WORD_PATTERN.encode("ascii"))
WORD_CHARACTERS = frozenset(string.ascii_lowercase + "'-")

assert len(PUNCTUATION_SYMBOLS) == 27 and len(LITERAL_ALPHABET) == 63


def char_to_code6(char):
    """
    Maps a literal-alphabet character to its 6-bit code.
    Args:
      char (str): A single character.
    Returns:
      int or None: The code in 1..63, or None if `char` is outside the alphabet.
    Examples:
      >>> char_to_code6("a"), char_to_code6("0"), char_to_code6("~")
      (1, 27, 63)
    """
    return _CHAR_TO_CODE.get(char)


def code6_to_char(code):
    if not 1 <= code <= len(LITERAL_ALPHABET):
        return None
    return LITERAL_ALPHABET[code - 1]


def is_word(surface):
    return WORD_RE.fullmatch(surface) is not None
