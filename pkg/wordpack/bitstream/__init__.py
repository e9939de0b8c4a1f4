from wordpack.bitstream.bit_buffer import (
    MAX_FIELD_WIDTH,
    BitBuffer,
    pad_to_byte,
    read_bits,
    write_bits,
)
