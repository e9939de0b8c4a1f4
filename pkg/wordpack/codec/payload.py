from dataclasses import dataclass

from wordpack.bitstream import BitBuffer
from wordpack.dictionary.reserved import CODE_WIDTH
from wordpack.utils.config import default_deflate_level
from wordpack.utils.errors import RangeError


@dataclass(frozen=True)
class Payload:
    """
    A sealed, byte-padded code stream and the counts gathered while writing it.

    `token_count` counts every 19-bit code except the END_OF_STREAM terminator;
    `content_bit_length` is the size of the stream before the terminator.
    """

    bits: BitBuffer
    token_count: int
    literal_char_count: int = 0
    raw_byte_count: int = 0
    content_bit_length: int = 0

    @property
    def unpadded_bit_length(self):
        return self.content_bit_length + CODE_WIDTH

    @property
    def bytes(self):
        return self.bits.bytes


@dataclass(frozen=True)
class EncodeOptions:
    second_stage: bool = True
    compression_level: int = None

    def __post_init__(self):
        if self.compression_level is None:
            object.__setattr__(self, "compression_level", default_deflate_level())
        if not 0 <= self.compression_level <= 9:
            raise RangeError(f"compression level must be in 0..9, got {self.compression_level}")
