from dataclasses import dataclass
from enum import IntEnum

CODE_WIDTH = 19
CODE_SPACE = 1 << CODE_WIDTH
RESERVED_BASE = 0x7FF00


class ReservedKind(IntEnum):
    """Reserved 19-bit codes at the top of the address space, in fixed order."""

    LITERAL_BEGIN = 0x7FF00
    RAW_BEGIN = 0x7FF01
    CASE_UPPER_SINGLE = 0x7FF02
    CASE_UPPER_BEGIN = 0x7FF03
    CASE_UPPER_END = 0x7FF04
    CASE_TITLE_SINGLE = 0x7FF05
    CASE_TOGGLE_SINGLE = 0x7FF06
    CASE_TOGGLE_BEGIN = 0x7FF07
    CASE_TOGGLE_END = 0x7FF08
    SPACE_EXPLICIT = 0x7FF09
    NEWLINE = 0x7FF0A
    NO_SPACE = 0x7FF0B
    END_OF_STREAM = 0x7FF0C


@dataclass(frozen=True)
class ReservedToken:
    kind: ReservedKind
    code: int


RESERVED_TOKENS = {int(kind): ReservedToken(kind, int(kind)) for kind in ReservedKind}


def is_reserved_band(code):
    return RESERVED_BASE <= code < CODE_SPACE
