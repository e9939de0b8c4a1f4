import logging

from wordpack.bitstream import BitBuffer
from wordpack.codec.emission import OCTET_WIDTH, RAW_LENGTH_WIDTH
from wordpack.codec.payload import Payload
from wordpack.dictionary.alphabet import (
    CHAR_WIDTH,
    TERMINATOR,
    WORD_BYTES_RE,
    code6_to_char,
    is_word,
)
from wordpack.dictionary.reserved import CODE_WIDTH, ReservedKind, ReservedToken
from wordpack.text.case_class import flip_initial, natural_form, toggle_form
from wordpack.text.tokens import SpacingState, Token
from wordpack.utils.errors import CorruptionError, StructureError, TruncationError

logger = logging.getLogger(__name__)

SINGLE_CASE_KINDS = {
    ReservedKind.CASE_UPPER_SINGLE,
    ReservedKind.CASE_TITLE_SINGLE,
    ReservedKind.CASE_TOGGLE_SINGLE,
}
RUN_ENDS = {
    ReservedKind.CASE_UPPER_BEGIN: ReservedKind.CASE_UPPER_END,
    ReservedKind.CASE_TOGGLE_BEGIN: ReservedKind.CASE_TOGGLE_END,
}


class _Run:
    __slots__ = ("begin", "length")

    def __init__(self, begin):
        self.begin = begin
        self.length = 0


def _render(lower, expects_sentence_case, pending, run):
    if run is not None:
        if run.begin is ReservedKind.CASE_UPPER_BEGIN:
            return lower.upper()
        return toggle_form(lower)
    if pending is ReservedKind.CASE_UPPER_SINGLE:
        return lower.upper()
    if pending is ReservedKind.CASE_TOGGLE_SINGLE:
        return toggle_form(lower)
    natural = natural_form(lower, expects_sentence_case)
    if pending is ReservedKind.CASE_TITLE_SINGLE:
        return flip_initial(natural)
    return natural


class _PayloadReader:
    """Walks a code stream, keeping the case structure that is currently open."""

    def __init__(self, buf, dictionary):
        self.buf = buf
        self.dictionary = dictionary
        self.cursor = 0
        self.tokens = []
        self.state = SpacingState()
        self.pending = None
        self.run = None

    def read(self, width):
        value, self.cursor = self.buf.read_bits(self.cursor, width)
        return value

    def peek_code(self):
        if self.cursor + CODE_WIDTH > self.buf.bit_length:
            return None
        value, _ = self.buf.read_bits(self.cursor, CODE_WIDTH)
        return value

    def emit(self, token):
        self.tokens.append(token)
        self.state = self.state.after(token)

    def require_no_case(self, what):
        if self.pending is not None or self.run is not None:
            open_kind = self.pending if self.pending is not None else self.run.begin
            raise StructureError(f"{what} inside {open_kind.name} at bit {self.cursor}")

    def read_literal(self):
        chars = []
        while True:
            value = self.read(CHAR_WIDTH)
            if value == TERMINATOR:
                break
            chars.append(code6_to_char(value))
        if not chars:
            raise CorruptionError(f"empty literal ending at bit {self.cursor}")
        return "".join(chars)

    def read_piece(self, code):
        if code == ReservedKind.LITERAL_BEGIN:
            return self.read_literal()
        entry = self.dictionary.lookup_surface(code)
        if entry is None or isinstance(entry, ReservedToken) or entry.is_punctuation:
            raise StructureError(f"code {code:#07x} cannot continue a glued word")
        return entry.surface

    def read_word(self, code):
        lower = self.read_piece(code)
        while self.peek_code() == ReservedKind.NO_SPACE:
            self.cursor += CODE_WIDTH
            lower += self.read_piece(self.read(CODE_WIDTH))
        surface = _render(lower, self.state.expects_sentence_case, self.pending, self.run)
        if not is_word(surface):
            raise StructureError(f"decoded word {surface!r} is malformed")
        self.pending = None
        if self.run is not None:
            self.run.length += 1
        self.emit(Token.word(surface, expects_sentence_case=self.state.expects_sentence_case))

    def read_raw(self):
        length = self.read(RAW_LENGTH_WIDTH)
        if length == 0:
            raise CorruptionError(f"zero-length raw run at bit {self.cursor}")
        if self.cursor + OCTET_WIDTH * length > self.buf.bit_length:
            raise TruncationError(
                f"raw run of {length} bytes at bit {self.cursor} passes end of stream"
            )
        data = bytes(self.read(OCTET_WIDTH) for _ in range(length))
        if WORD_BYTES_RE.fullmatch(data):
            # tokenizer raw runs never hold letters, so this is an escaped word
            self.require_no_case("escaped word")
            surface = data.decode("ascii")
            self.emit(Token.word(surface, expects_sentence_case=self.state.expects_sentence_case))
        else:
            self.require_no_case("raw run")
            self.emit(Token.raw(data))

    def read_reserved(self, kind):
        if kind in SINGLE_CASE_KINDS:
            self.require_no_case(kind.name)
            self.pending = kind
        elif kind in RUN_ENDS:
            self.require_no_case(kind.name)
            self.run = _Run(kind)
        elif kind in (ReservedKind.CASE_UPPER_END, ReservedKind.CASE_TOGGLE_END):
            if self.run is None or RUN_ENDS[self.run.begin] is not kind:
                raise StructureError(f"{kind.name} without its BEGIN at bit {self.cursor}")
            if self.run.length < 2:
                raise StructureError(f"{kind.name} closes a run of {self.run.length} words")
            self.run = None
        elif kind is ReservedKind.LITERAL_BEGIN:
            self.read_word(kind)
        elif kind is ReservedKind.RAW_BEGIN:
            self.read_raw()
        elif kind is ReservedKind.SPACE_EXPLICIT:
            self.require_no_case("explicit space")
            self.emit(Token.extra_space())
        elif kind is ReservedKind.NEWLINE:
            self.require_no_case("newline")
            self.emit(Token.newline())
        else:
            raise StructureError(f"stray {kind.name} at bit {self.cursor}")

    def read_all(self):
        while True:
            code = self.read(CODE_WIDTH)
            if code == ReservedKind.END_OF_STREAM:
                break
            entry = self.dictionary.lookup_surface(code)
            if entry is None:
                raise CorruptionError(f"unassigned code {code:#07x} at bit {self.cursor - CODE_WIDTH}")
            if isinstance(entry, ReservedToken):
                self.read_reserved(entry.kind)
            elif entry.is_punctuation:
                self.require_no_case(f"punctuation {entry.surface!r}")
                self.emit(Token.punct(entry.surface, no_space_after=not entry.trailing_space))
            else:
                self.read_word(code)
        self.require_no_case("END_OF_STREAM")
        self.check_padding()
        return self.tokens

    def check_padding(self):
        spare = self.buf.bit_length - self.cursor
        if spare >= 8:
            raise CorruptionError(f"{spare} bits follow END_OF_STREAM")
        if spare and self.read(spare):
            raise CorruptionError("non-zero padding after END_OF_STREAM")


def decode(payload, dictionary):
    """
    Decodes a code stream back into tokens.
    Args:
      payload (Payload or BitBuffer): The stream, END_OF_STREAM terminated.
      dictionary (Dictionary): The dictionary it was encoded with.
    Returns:
      list: Token objects equal to the ones that were encoded.
    Raises:
      CorruptionError: On unassigned codes, empty or zero-length escapes, or
        data after the terminator. StructureError (a CorruptionError) when
        case tokens, glue or runs are not well formed.
      TruncationError: If the stream ends before END_OF_STREAM.
    """
    buf = payload.bits if isinstance(payload, Payload) else payload
    if not isinstance(buf, BitBuffer):
        buf = BitBuffer.from_bytes(buf)
    tokens = _PayloadReader(buf, dictionary).read_all()
    logger.debug("decoded %d tokens", len(tokens))
    return tokens
