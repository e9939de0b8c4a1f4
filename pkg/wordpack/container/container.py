"""
Compressed files (`.wpk`).

Header: magic "WPK1", version (1 byte), flags (1 byte, bit 0 set when the body
is deflated), dictionary digest (u64 big-endian) and the unpadded payload bit
length (u64 big-endian). The body follows: payload bytes, deflated or not.
"""
import logging
import struct
from dataclasses import dataclass

from wordpack.bitstream import BitBuffer
from wordpack.codec import EncodeOptions, decode, encode
from wordpack.second_stage import DEFLATE_FLAG, DeflateStage, IdentityStage
from wordpack.text import detokenize, tokenize
from wordpack.utils.errors import FormatError, TruncationError, WrongDictionaryError

logger = logging.getLogger(__name__)

MAGIC = b"WPK1"
FORMAT_VERSION = 1
HEADER = struct.Struct(">4sBBQQ")
KNOWN_FLAGS = DEFLATE_FLAG


@dataclass(frozen=True)
class Container:
    dict_digest: int
    payload_bit_length: int
    body: bytes
    flags: int = 0
    version: int = FORMAT_VERSION

    @property
    def deflated(self):
        return bool(self.flags & DEFLATE_FLAG)

    @property
    def payload_byte_length(self):
        return (self.payload_bit_length + 7) // 8

    def to_bytes(self):
        header = HEADER.pack(
            MAGIC, self.version, self.flags, self.dict_digest, self.payload_bit_length
        )
        return header + self.body

    @classmethod
    def from_bytes(cls, data):
        """
        Parses a container without touching its body.
        Raises:
          FormatError: If the magic, version or flags are not recognised.
          TruncationError: If the data ends inside the header.
        """
        data = bytes(data)
        if not MAGIC.startswith(data[:4]):
            raise FormatError(f"not a wordpack container (magic {data[:4]!r})")
        if len(data) < HEADER.size:
            raise TruncationError(
                f"container header needs {HEADER.size} bytes, got {len(data)}"
            )
        magic, version, flags, digest, bit_length = HEADER.unpack_from(data)
        if version != FORMAT_VERSION:
            raise FormatError(f"unsupported container version {version}")
        if flags & ~KNOWN_FLAGS:
            raise FormatError(f"unknown container flags {flags:#04x}")
        return cls(digest, bit_length, data[HEADER.size :], flags, version)


def inspect_container(data):
    return Container.from_bytes(data)


def _stage_for(options):
    if not options.second_stage:
        return IdentityStage()
    return DeflateStage(options.compression_level)


def frame_payload(payload, dictionary, options=None, stage=None):
    """
    Runs the second stage over an encoded payload and frames it as a container.
    Args:
      payload (Payload): The encoder's output for some text.
      dictionary (Dictionary): The dictionary the payload was encoded with.
      options (EncodeOptions, optional): Defaults to EncodeOptions().
      stage (BaseSecondStage, optional): Overrides the stage chosen by `options`.
    Returns:
      bytes: The container.
    """
    if options is None:
        options = EncodeOptions()
    if stage is None:
        stage = _stage_for(options)
    body = stage.compress(payload.bytes)
    container = Container(dictionary.digest, payload.unpadded_bit_length, body, stage.flag)
    logger.debug(
        "compressed %d codes into a %d-byte body with %r", payload.token_count, len(body), stage
    )
    return container.to_bytes()


def compress(text, dictionary, options=None, stage=None):
    """
    Reduces text to dictionary codes and frames it as a container.
    Args:
      text (bytes or str): The input; str is encoded as UTF-8.
      dictionary (Dictionary): The lookup table.
      options (EncodeOptions, optional): Defaults to EncodeOptions().
      stage (BaseSecondStage, optional): Overrides the stage chosen by `options`.
    Returns:
      bytes: The container.
    Examples:
      >>> from wordpack.dictionary import build_dictionary
      >>> d = build_dictionary(["hello"])
      >>> blob = compress(b"Hello.", d, EncodeOptions(second_stage=False))
      >>> len(blob), decompress(blob, d)
      (30, b'Hello.')
    """
    return frame_payload(encode(tokenize(text), dictionary), dictionary, options, stage)


def decompress(data, dictionary):
    """
    Restores the text held by a container.
    Args:
      data (bytes): Container bytes.
      dictionary (Dictionary): The dictionary the container was written with.
    Returns:
      bytes: The original text.
    Raises:
      FormatError: On bad magic, version or flags.
      WrongDictionaryError: If the container names another dictionary.
      CorruptionError: If the body does not inflate or the payload is malformed.
      TruncationError: If the body does not match the declared bit length.
    """
    container = Container.from_bytes(data)
    if container.dict_digest != dictionary.digest:
        raise WrongDictionaryError(container.dict_digest, dictionary.digest)
    # the level only matters when writing
    stage = DeflateStage(level=9) if container.deflated else IdentityStage()
    expected = container.payload_byte_length
    payload = stage.decompress(container.body, expected)
    if len(payload) != expected:
        raise TruncationError(
            f"body holds {len(payload)} payload bytes, header declares {expected}"
        )
    buf = BitBuffer.from_bytes(payload, container.payload_bit_length)
    return detokenize(decode(buf, dictionary))
