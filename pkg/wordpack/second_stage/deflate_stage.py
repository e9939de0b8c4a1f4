import logging
import sys
import zlib

from wordpack.second_stage.base_second_stage import BaseSecondStage
from wordpack.utils.config import default_deflate_level
from wordpack.utils.errors import CorruptionError, RangeError

logger = logging.getLogger(__name__)

# Negative window bits select a bare RFC-1951 stream without zlib framing
RAW_DEFLATE_WBITS = -15
DEFLATE_FLAG = 0x01


class DeflateStage(BaseSecondStage):
    """
    RFC-1951 deflate over the payload bytes.

    Examples:
      >>> stage = DeflateStage(level=9)
      >>> stage.decompress(stage.compress(b"abc" * 100), 300) == b"abc" * 100
      True
    """

    flag = DEFLATE_FLAG

    def __init__(self, level=None):
        if level is None:
            level = default_deflate_level()
        if not 0 <= level <= 9:
            raise RangeError(f"deflate level must be in 0..9, got {level}")
        self.level = level

    def compress(self, data):
        compressor = zlib.compressobj(self.level, zlib.DEFLATED, RAW_DEFLATE_WBITS)
        body = compressor.compress(bytes(data)) + compressor.flush()
        logger.debug("deflated %d bytes into %d at level %d", len(data), len(body), self.level)
        return body

    def decompress(self, body, expected_length):
        inflater = zlib.decompressobj(RAW_DEFLATE_WBITS)
        try:
            # one extra byte lets an overlong stream show itself
            data = inflater.decompress(bytes(body), min(expected_length + 1, sys.maxsize))
        except zlib.error as e:
            raise CorruptionError(f"body does not inflate: {e}") from e
        if not inflater.eof:
            if len(data) > expected_length:
                return data
            raise CorruptionError("deflate stream is incomplete")
        if inflater.unused_data:
            raise CorruptionError(f"{len(inflater.unused_data)} bytes follow the deflate stream")
        return data

    def __repr__(self):
        return f"DeflateStage(level={self.level})"
