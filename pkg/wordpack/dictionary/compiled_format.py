"""
Compiled dictionary files (`.wpkd`).

Header: magic "WPKD", format version (1 byte), entry count (u32 big-endian),
digest (u64 big-endian). Body, per entry in code order: 19-bit code, the
surface as 6-bit characters, the 6-bit `000000` terminator and a 1-bit
trailing-space flag. The body is padded to a byte boundary once, at the end.
"""
import logging
import struct

from wordpack.bitstream import BitBuffer
from wordpack.dictionary.alphabet import (
    CHAR_WIDTH,
    MAX_SURFACE_LENGTH,
    TERMINATOR,
    char_to_code6,
    code6_to_char,
)
from wordpack.dictionary.reserved import CODE_WIDTH
from wordpack.dictionary.word_lookup_table import (
    MAX_ENTRIES,
    PUNCTUATION_ENTRY_COUNT,
    DictEntry,
    Dictionary,
    punctuation_entries,
    validate_word,
)
from wordpack.utils.errors import (
    CorruptionError,
    FormatError,
    InvalidWordError,
    TruncationError,
)

logger = logging.getLogger(__name__)

MAGIC = b"WPKD"
FORMAT_VERSION = 1
HEADER = struct.Struct(">4sBIQ")


def record_bits(surface):
    return CODE_WIDTH + CHAR_WIDTH * len(surface) + CHAR_WIDTH + 1


def serialize_compiled(dictionary):
    """
    Serializes a dictionary to the compiled `.wpkd` layout.
    Args:
      dictionary (Dictionary): The dictionary to write.
    Returns:
      bytes: Header followed by the bit-packed entry records.
    Examples:
      >>> record_bits("a")
      32
    """
    buf = BitBuffer()
    for entry in dictionary.entries:
        buf.write_bits(entry.code, CODE_WIDTH)
        for char in entry.surface:
            buf.write_bits(char_to_code6(char), CHAR_WIDTH)
        buf.write_bits(TERMINATOR, CHAR_WIDTH)
        buf.write_bits(int(entry.trailing_space), 1)
    buf.pad_to_byte().seal()
    header = HEADER.pack(MAGIC, FORMAT_VERSION, len(dictionary.entries), dictionary.digest)
    return header + buf.bytes


def _read_entry(buf, cursor, index):
    code, cursor = buf.read_bits(cursor, CODE_WIDTH)
    if code != index:
        raise CorruptionError(f"entry {index} carries code {code}")
    chars = []
    while True:
        value, cursor = buf.read_bits(cursor, CHAR_WIDTH)
        if value == TERMINATOR:
            break
        if len(chars) == MAX_SURFACE_LENGTH:
            raise CorruptionError(f"entry {index} runs past {MAX_SURFACE_LENGTH} characters")
        chars.append(code6_to_char(value))
    flag, cursor = buf.read_bits(cursor, 1)
    return DictEntry(code, "".join(chars), bool(flag)), cursor


def load_compiled(data):
    """
    Reads a compiled `.wpkd` dictionary.
    Args:
      data (bytes): File contents.
    Returns:
      Dictionary: The reconstructed dictionary, digest verified.
    Raises:
      FormatError: If the magic or version is wrong.
      TruncationError: If the data ends inside the header or an entry.
      CorruptionError: If the entries are inconsistent or the digest does not match.
    """
    if data[:4] != MAGIC:
        raise FormatError(f"not a compiled dictionary (magic {bytes(data[:4])!r})")
    if len(data) < HEADER.size:
        raise TruncationError("compiled dictionary header is truncated")
    _, version, count, stored_digest = HEADER.unpack_from(data)
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported compiled dictionary version {version}")
    if count > MAX_ENTRIES:
        raise CorruptionError(f"entry count {count} exceeds {MAX_ENTRIES}")

    buf = BitBuffer.from_bytes(data[HEADER.size:])
    cursor = 0
    entries = []
    for index in range(count):
        try:
            entry, cursor = _read_entry(buf, cursor, index)
        except TruncationError as e:
            # a damaged terminator reads past the end just like a cut file
            raise TruncationError(
                f"entry {index} of {count} runs past the end: truncated or corrupt file"
            ) from e
        entries.append(entry)
    if buf.bit_length - cursor >= 8:
        raise CorruptionError("trailing bytes after the last entry")
    if cursor < buf.bit_length:
        padding, _ = buf.read_bits(cursor, buf.bit_length - cursor)
        if padding:
            raise CorruptionError("non-zero padding after the last entry")

    expected = punctuation_entries()
    if entries[:PUNCTUATION_ENTRY_COUNT] != expected[: len(entries)] or (
        len(entries) < PUNCTUATION_ENTRY_COUNT
    ):
        raise CorruptionError("punctuation block does not match the fixed layout")
    seen = set()
    for entry in entries[PUNCTUATION_ENTRY_COUNT:]:
        try:
            validate_word(entry.surface)
        except InvalidWordError as e:
            raise CorruptionError(f"entry {entry.code}: {e}") from e
        if entry.surface in seen or not entry.trailing_space:
            raise CorruptionError(f"entry {entry.code} duplicates {entry.surface!r}")
        seen.add(entry.surface)

    dictionary = Dictionary.from_entries(entries)
    if dictionary.digest != stored_digest:
        raise CorruptionError(
            f"digest mismatch: stored {stored_digest:016x}, computed {dictionary.digest:016x}"
        )
    logger.debug("loaded dictionary with %d entries", len(entries))
    return dictionary


def save_dictionary(dictionary, path):
    with open(path, "wb") as f:
        f.write(serialize_compiled(dictionary))


def load_dictionary(path):
    with open(path, "rb") as f:
        return load_compiled(f.read())
