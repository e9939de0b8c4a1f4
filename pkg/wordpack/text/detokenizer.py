from wordpack.dictionary.alphabet import PUNCTUATION_SYMBOLS, is_word
from wordpack.text.tokens import TokenKind
from wordpack.utils.errors import StructureError


def detokenize(tokens):
    """
    Rebuilds text from tokens with canonical spacing.
    Args:
      tokens (iterable): Token objects, as produced by `tokenize` or the decoder.
    Returns:
      bytes: The text. One space goes between consecutive words (extra spaces
      in between do not cancel it), a punctuation mark is followed by one space
      unless `no_space_after`, and newlines and raw runs get no implicit spacing.
    Raises:
      StructureError: If a token is malformed.
    Examples:
      >>> from wordpack.text.tokens import Token
      >>> detokenize([Token.word("a"), Token.punct(","), Token.word("b")])
      b'a, b'
    """
    out = bytearray()
    owes_space = False
    for position, token in enumerate(tokens):
        kind = token.kind
        if kind is TokenKind.WORD:
            if not is_word(token.surface):
                raise StructureError(f"token {position}: malformed word {token.surface!r}")
            if owes_space:
                out.append(0x20)
            out += token.surface.encode("ascii")
            owes_space = True
        elif kind is TokenKind.PUNCT:
            if len(token.surface) != 1 or token.surface not in PUNCTUATION_SYMBOLS:
                raise StructureError(f"token {position}: unknown punctuation {token.surface!r}")
            out += token.surface.encode("ascii")
            if not token.no_space_after:
                out.append(0x20)
            owes_space = False
        elif kind is TokenKind.EXTRA_SPACE:
            out.append(0x20)
        elif kind is TokenKind.NEWLINE:
            out.append(0x0A)
            owes_space = False
        elif kind is TokenKind.RAW:
            if not token.data:
                raise StructureError(f"token {position}: empty raw run")
            out += token.data
            owes_space = False
        else:
            raise StructureError(f"token {position}: unknown kind {kind!r}")
    return bytes(out)
