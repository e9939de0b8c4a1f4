from wordpack.utils.errors import CorruptionError, RangeError, TruncationError

MAX_FIELD_WIDTH = 32


def _check_width(width):
    if not 1 <= width <= MAX_FIELD_WIDTH:
        raise RangeError(f"field width must be in 1..{MAX_FIELD_WIDTH}, got {width}")


class BitBuffer:
    """
    Growable MSB-first bit buffer holding fields of any width up to 32 bits.

    Writes append most-significant bit first; reads are positional and take an
    explicit cursor, so a sealed buffer can be shared by several readers.

    Examples:
      >>> buf = BitBuffer().write_bits(0b101, 3)
      >>> buf.bytes, buf.bit_length
      (b'\\xa0', 3)
      >>> buf.read_bits(0, 3)
      (5, 3)
    """

    __slots__ = ("_data", "_bit_length", "_sealed")

    def __init__(self):
        self._data = bytearray()
        self._bit_length = 0
        self._sealed = False

    @classmethod
    def from_bytes(cls, data, bit_length=None):
        """
        Wraps existing bytes as a sealed buffer.
        Args:
          data (bytes): The packed octets.
          bit_length (int, optional): Number of valid bits. Defaults to 8 * len(data).
        Returns:
          BitBuffer: A sealed buffer over a copy of `data`.
        Raises:
          RangeError: If `bit_length` does not fit exactly in `data`.
          CorruptionError: If bits past `bit_length` in the final byte are not zero.
        """
        if bit_length is None:
            bit_length = 8 * len(data)
        if bit_length < 0 or (bit_length + 7) // 8 != len(data):
            raise RangeError(f"{bit_length} bits do not fit exactly in {len(data)} bytes")
        spare = (-bit_length) % 8
        if spare and data[-1] & ((1 << spare) - 1):
            raise CorruptionError("non-zero padding bits after the last valid bit")
        buf = cls()
        buf._data = bytearray(data)
        buf._bit_length = bit_length
        buf._sealed = True
        return buf

    @property
    def bit_length(self):
        return self._bit_length

    @property
    def bytes(self):
        return bytes(self._data)

    def seal(self):
        self._sealed = True
        return self

    def write_bits(self, value, width):
        """
        Appends `value` as a `width`-bit field, most significant bit first.
        Args:
          value (int): Unsigned value, must be below 2**width.
          width (int): Field width in bits, 1..32.
        Returns:
          BitBuffer: self, so writes can be chained.
        Raises:
          RangeError: If the width is out of range or the value does not fit.
        """
        _check_width(width)
        if value < 0 or value >> width:
            raise RangeError(f"value {value} does not fit in {width} bits")
        if self._sealed:
            raise RangeError("cannot write to a sealed buffer")
        remaining = width
        while remaining:
            offset = self._bit_length & 7
            if offset == 0:
                self._data.append(0)
            take = min(8 - offset, remaining)
            remaining -= take
            chunk = (value >> remaining) & ((1 << take) - 1)
            self._data[-1] |= chunk << (8 - offset - take)
            self._bit_length += take
        return self

    def read_bits(self, cursor, width):
        """
        Reads the `width`-bit field starting at bit offset `cursor`.
        Args:
          cursor (int): Bit offset of the field.
          width (int): Field width in bits, 1..32.
        Returns:
          tuple: (value, new cursor).
        Raises:
          TruncationError: If the field extends past `bit_length`.
        """
        _check_width(width)
        if cursor < 0 or cursor + width > self._bit_length:
            raise TruncationError(
                f"read of {width} bits at offset {cursor} passes end of stream "
                f"({self._bit_length} bits)"
            )
        value = 0
        remaining = width
        while remaining:
            offset = cursor & 7
            take = min(8 - offset, remaining)
            byte = self._data[cursor >> 3]
            value = (value << take) | ((byte >> (8 - offset - take)) & ((1 << take) - 1))
            cursor += take
            remaining -= take
        return value, cursor

    def pad_to_byte(self):
        """
        Appends zero bits up to the next byte boundary (0..7 bits).
        Returns:
          BitBuffer: self.
        """
        # The trailing byte is already zero-filled, only the length moves
        self._bit_length = (self._bit_length + 7) & ~7
        return self

    def __eq__(self, other):
        if not isinstance(other, BitBuffer):
            return NotImplemented
        return self._bit_length == other._bit_length and self._data == other._data

    def __repr__(self):
        return f"BitBuffer(bit_length={self._bit_length}, bytes={self.bytes.hex()})"


def write_bits(buf, value, width):
    return buf.write_bits(value, width)


def read_bits(buf, cursor, width):
    return buf.read_bits(cursor, width)


def pad_to_byte(buf):
    return buf.pad_to_byte()
