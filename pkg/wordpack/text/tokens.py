from dataclasses import dataclass, field
from enum import Enum

from wordpack.dictionary.alphabet import SENTENCE_ENDINGS
from wordpack.text.case_class import CaseClass, classify_case


class TokenKind(Enum):
    WORD = "word"
    PUNCT = "punct"
    EXTRA_SPACE = "extra_space"
    NEWLINE = "newline"
    RAW = "raw"


@dataclass(frozen=True)
class Token:
    """
    One tokenizer unit. Only the fields that belong to `kind` are set.

    `span` holds the source byte offsets for diagnostics and is ignored by
    equality, so decoded tokens compare equal to the tokenizer's.
    """

    kind: TokenKind
    surface: str = ""
    case: CaseClass = None
    no_space_after: bool = False
    data: bytes = b""
    span: tuple = field(default=None, compare=False, repr=False)

    @classmethod
    def word(cls, surface, case=None, expects_sentence_case=False, span=None):
        if case is None:
            case = classify_case(surface, expects_sentence_case)
        return cls(TokenKind.WORD, surface=surface, case=case, span=span)

    @classmethod
    def punct(cls, symbol, no_space_after=False, span=None):
        return cls(TokenKind.PUNCT, surface=symbol, no_space_after=no_space_after, span=span)

    @classmethod
    def extra_space(cls, span=None):
        return cls(TokenKind.EXTRA_SPACE, span=span)

    @classmethod
    def newline(cls, span=None):
        return cls(TokenKind.NEWLINE, span=span)

    @classmethod
    def raw(cls, data, span=None):
        return cls(TokenKind.RAW, data=bytes(data), span=span)

    def __repr__(self):
        if self.kind is TokenKind.WORD:
            return f"WORD({self.surface!r}, {self.case.name})"
        if self.kind is TokenKind.PUNCT:
            return f"PUNCT({self.surface!r}, no_space_after={self.no_space_after})"
        if self.kind is TokenKind.RAW:
            return f"RAW({self.data!r})"
        return self.kind.name


@dataclass(frozen=True)
class SpacingState:
    """
    Whether the next word sits where sentence case is the default.

    True at the start of a document and after ".", "!" or "?"; cleared by words
    and raw runs; other tokens leave it alone.
    """

    expects_sentence_case: bool = True

    def after(self, token):
        if token.kind is TokenKind.WORD or token.kind is TokenKind.RAW:
            return SpacingState(False)
        if token.kind is TokenKind.PUNCT and token.surface in SENTENCE_ENDINGS:
            return SpacingState(True)
        return self


def replay(tokens):
    """
    Yields (state, token) pairs, the state being the one in force before each token.
    """
    state = SpacingState()
    for token in tokens:
        yield state, token
        state = state.after(token)
