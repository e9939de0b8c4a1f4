from wordpack.dictionary.alphabet import PUNCTUATION_SYMBOLS, WORD_BYTES_RE
from wordpack.text.tokens import SpacingState, Token, TokenKind

SPACE = 0x20
LINE_FEED = 0x0A
_LETTERS = frozenset(b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz")
_PUNCTUATION = frozenset(PUNCTUATION_SYMBOLS.encode("ascii"))
_STRUCTURAL = _LETTERS | _PUNCTUATION | {SPACE, LINE_FEED}


def _as_bytes(text):
    return text.encode("utf-8") if isinstance(text, str) else bytes(text)


def tokenize(text):
    """
    Splits text into words, punctuation, whitespace deviations and raw runs.
    Args:
      text (bytes or str): Any byte sequence; str is encoded as UTF-8.
    Returns:
      list: Token objects whose detokenization reproduces `text` byte for byte.
    Notes:
      A single space between two words is implicit and produces no token, as
      does the one space that follows a punctuation mark. Every other space is
      an EXTRA_SPACE token. Bytes that no other token can carry (digits, tabs,
      carriage returns, non-ASCII) form RAW runs.
    Examples:
      >>> tokenize(b"a  b")
      [WORD('a', LOWER), EXTRA_SPACE, WORD('b', LOWER)]
      >>> len(tokenize("He is a very good boy."))
      7
    """
    data = _as_bytes(text)
    tokens = []
    state = SpacingState()
    index = 0
    end = len(data)
    while index < end:
        byte = data[index]
        if byte in _LETTERS:
            match = WORD_BYTES_RE.match(data, index)
            surface = match.group().decode("ascii")
            token = Token.word(
                surface,
                expects_sentence_case=state.expects_sentence_case,
                span=(index, match.end()),
            )
            index = match.end()
        elif byte in _PUNCTUATION:
            spaced = index + 1 < end and data[index + 1] == SPACE
            token = Token.punct(
                chr(byte), no_space_after=not spaced, span=(index, index + 1 + spaced)
            )
            index += 1 + spaced
        elif byte == SPACE:
            run_end = index
            while run_end < end and data[run_end] == SPACE:
                run_end += 1
            implicit = (
                tokens
                and tokens[-1].kind is TokenKind.WORD
                and run_end < end
                and data[run_end] in _LETTERS
            )
            for position in range(index, run_end - 1 if implicit else run_end):
                tokens.append(Token.extra_space(span=(position, position + 1)))
            index = run_end
            continue
        elif byte == LINE_FEED:
            token = Token.newline(span=(index, index + 1))
            index += 1
        else:
            run_end = index + 1
            while run_end < end and data[run_end] not in _STRUCTURAL:
                run_end += 1
            token = Token.raw(data[index:run_end], span=(index, run_end))
            index = run_end
        tokens.append(token)
        state = state.after(token)
    return tokens
