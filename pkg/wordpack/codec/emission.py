"""
The emission plan shared by the encoder and the cost model.

`iter_fields` walks a token stream and yields every bit field the encoder
writes for it, in order, without the END_OF_STREAM terminator. `encode`
writes the fields; `metrics.estimate` only sums their widths.
"""
from enum import Enum
from typing import NamedTuple

from wordpack.codec.case_plan import case_plan
from wordpack.codec.word_segmentation import segment_word
from wordpack.dictionary.alphabet import CHAR_WIDTH, TERMINATOR, char_to_code6
from wordpack.dictionary.reserved import CODE_WIDTH, ReservedKind
from wordpack.text.tokens import SpacingState, TokenKind
from wordpack.utils.errors import ConsistencyError

RAW_LENGTH_WIDTH = 32
OCTET_WIDTH = 8
MAX_RAW_LENGTH = (1 << RAW_LENGTH_WIDTH) - 1


class FieldKind(Enum):
    CODE = "code"
    CHAR = "char"
    LENGTH = "length"
    OCTET = "octet"


class Field(NamedTuple):
    value: int
    width: int
    kind: FieldKind


def code_field(code):
    return Field(int(code), CODE_WIDTH, FieldKind.CODE)


def _literal_fields(text):
    yield code_field(ReservedKind.LITERAL_BEGIN)
    for char in text:
        code = char_to_code6(char)
        if code is None:
            raise ConsistencyError(f"{char!r} is outside the literal alphabet")
        yield Field(code, CHAR_WIDTH, FieldKind.CHAR)
    yield Field(TERMINATOR, CHAR_WIDTH, FieldKind.CHAR)


def _raw_fields(data):
    if len(data) > MAX_RAW_LENGTH:
        raise ConsistencyError(f"raw run of {len(data)} bytes exceeds a 32-bit length")
    yield code_field(ReservedKind.RAW_BEGIN)
    yield Field(len(data), RAW_LENGTH_WIDTH, FieldKind.LENGTH)
    for octet in data:
        yield Field(octet, OCTET_WIDTH, FieldKind.OCTET)


def _word_fields(lower, dictionary, segments):
    pieces = segments.get(lower)
    if pieces is None:
        pieces = segments[lower] = segment_word(lower, dictionary)
    for position, piece in enumerate(pieces):
        if position:
            yield code_field(ReservedKind.NO_SPACE)
        if piece.code is not None:
            yield code_field(piece.code)
        else:
            yield from _literal_fields(piece.text)


def _punct_field(token, dictionary):
    code = dictionary.lookup_code(token.surface, not token.no_space_after)
    if code is None:
        raise ConsistencyError(f"dictionary has no entry for punctuation {token.surface!r}")
    return code_field(code)


def iter_fields(tokens, dictionary):
    """
    Yields the bit fields that encode a token stream.
    Args:
      tokens (iterable): Token objects.
      dictionary (Dictionary): The lookup table.
    Yields:
      Field: (value, width, kind) in stream order, END_OF_STREAM excluded.
    Raises:
      ConsistencyError: If the dictionary lacks a punctuation entry or a raw
        run does not fit its length field.
    Examples:
      >>> from wordpack.dictionary import build_dictionary
      >>> from wordpack.text import tokenize
      >>> d = build_dictionary("he is a very good boy".split())
      >>> fields = list(iter_fields(tokenize(b"He is a very good boy."), d))
      >>> len(fields), sum(f.width for f in fields)
      (7, 133)
    """
    tokens = list(tokens)
    segments = {}
    state = SpacingState()
    index = 0
    while index < len(tokens):
        token = tokens[index]
        kind = token.kind
        if kind is TokenKind.WORD:
            following = (tokens[i] for i in range(index + 1, len(tokens)))
            plan = case_plan(token, state, following)
            if plan.raw_escape:
                yield from _raw_fields(token.surface.encode("ascii"))
                state = state.after(token)
                index += 1
                continue
            run = tokens[index : index + plan.run_length]
            for reserved in plan.before:
                yield code_field(reserved)
            for word in run:
                yield from _word_fields(word.surface.lower(), dictionary, segments)
                state = state.after(word)
            for reserved in plan.after:
                yield code_field(reserved)
            index += plan.run_length
            continue
        if kind is TokenKind.PUNCT:
            yield _punct_field(token, dictionary)
        elif kind is TokenKind.EXTRA_SPACE:
            yield code_field(ReservedKind.SPACE_EXPLICIT)
        elif kind is TokenKind.NEWLINE:
            yield code_field(ReservedKind.NEWLINE)
        elif kind is TokenKind.RAW:
            yield from _raw_fields(token.data)
        else:
            raise ConsistencyError(f"cannot encode token kind {kind!r}")
        state = state.after(token)
        index += 1
