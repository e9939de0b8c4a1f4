import math
from decimal import Decimal
from fractions import Fraction

from wordpack.dictionary.alphabet import CHAR_WIDTH
from wordpack.dictionary.reserved import CODE_SPACE, CODE_WIDTH


def _round_half_up(value):
    return math.floor(Fraction(value) + Fraction(1, 2))


def table_memory_bits(entry_count, avg_word_chars):
    """
    Memory needed by a lookup table of `entry_count` records.
    Args:
      entry_count (int): Number of entries.
      avg_word_chars (int, float, Fraction or str): Average word length in characters.
    Returns:
      int: entry_count * (19 + 6 * round(avg_word_chars) + 6) bits, rounding half-up.
    Examples:
      >>> table_memory_bits(524288, 7)
      35127296
      >>> table_memory_bits(1000, "6.91")
      67000
    """
    if entry_count < 0:
        raise ValueError(f"entry_count must be non-negative, got {entry_count}")
    chars = _round_half_up(avg_word_chars)
    return entry_count * (CODE_WIDTH + CHAR_WIDTH * chars + CHAR_WIDTH)


def full_table_memory_bits(avg_word_chars):
    return table_memory_bits(CODE_SPACE, avg_word_chars)


def describe_bits(bits):
    """
    Renders a bit count the way the memory formula is usually quoted.
    Examples:
      >>> describe_bits(35127296)
      '35127296 bits = 4390912 bytes = 4288 KB = 4.1875 MB'
    """
    octets = Decimal(bits) / 8
    kilobytes = octets / 1024
    megabytes = kilobytes / 1024
    return (
        f"{bits} bits = {_plain(octets)} bytes = {_plain(kilobytes)} KB = "
        f"{_plain(megabytes)} MB"
    )


def _plain(value):
    text = f"{value.quantize(Decimal('0.0001')):f}"
    return text.rstrip("0").rstrip(".") if "." in text else text
