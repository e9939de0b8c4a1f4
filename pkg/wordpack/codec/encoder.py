import logging

from wordpack.bitstream import BitBuffer
from wordpack.codec.emission import FieldKind, code_field, iter_fields
from wordpack.codec.payload import Payload
from wordpack.dictionary.reserved import ReservedKind

logger = logging.getLogger(__name__)


def encode(tokens, dictionary):
    """
    Encodes tokens into a 19-bit code payload.
    Args:
      tokens (iterable): Token objects, usually from `tokenize`.
      dictionary (Dictionary): The lookup table.
    Returns:
      Payload: The stream terminated by END_OF_STREAM and zero-padded to a byte.
    Examples:
      >>> from wordpack.dictionary import build_dictionary
      >>> encode([], build_dictionary([])).bytes
      b'\\xff\\xe1\\x80'
    """
    buf = BitBuffer()
    token_count = literal_chars = raw_bytes = 0
    for field in iter_fields(tokens, dictionary):
        buf.write_bits(field.value, field.width)
        if field.kind is FieldKind.CODE:
            token_count += 1
        elif field.kind is FieldKind.CHAR and field.value:
            literal_chars += 1
        elif field.kind is FieldKind.OCTET:
            raw_bytes += 1
    content_bit_length = buf.bit_length
    terminator = code_field(ReservedKind.END_OF_STREAM)
    buf.write_bits(terminator.value, terminator.width)
    buf.pad_to_byte().seal()
    logger.debug("encoded %d codes into %d bits", token_count, content_bit_length)
    return Payload(buf, token_count, literal_chars, raw_bytes, content_bit_length)
