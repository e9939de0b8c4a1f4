from dataclasses import dataclass

from wordpack.dictionary.alphabet import CHAR_WIDTH, MAX_SURFACE_LENGTH
from wordpack.dictionary.reserved import CODE_WIDTH
from wordpack.dictionary.word_lookup_table import PUNCTUATION_ENTRY_COUNT

_UNREACHED = float("inf")


@dataclass(frozen=True)
class Piece:
    """A dictionary code, or (code None) a literal run of lowercase characters."""

    text: str
    code: int = None

    @property
    def bits(self):
        if self.code is not None:
            return CODE_WIDTH
        return literal_bits(self.text)


def literal_bits(text):
    # LITERAL_BEGIN, the characters, then the terminator
    return CODE_WIDTH + CHAR_WIDTH * len(text) + CHAR_WIDTH


def segment_word(lower, dictionary):
    """
    Cheapest way to spell a lowercase word with dictionary codes and literals.
    Args:
      lower (str): Lowercase word surface.
      dictionary (Dictionary): The lookup table.
    Returns:
      tuple: Pieces to emit in order; consecutive pieces are glued with NO_SPACE
      (19 bits each). A whole-word hit always wins since it costs one code.
    Notes:
      Each position tries every dictionary piece ending there, up to the
      longest word in the table (at most 64 characters), so a run of n letters
      costs about n times that many lookups. A 100,000-letter run takes seconds.
    Examples:
      >>> from wordpack.dictionary import build_dictionary
      >>> d = build_dictionary(["sun", "bath"])
      >>> [piece.text for piece in segment_word("sunbath", d)]
      ['sun', 'bath']
      >>> segment_word("andrion", d)
      (Piece(text='andrion', code=None),)
    """
    whole = dictionary.lookup_code(lower)
    if whole is not None:
        return (Piece(lower, whole),)
    size = len(lower)
    if size < 2 or not dictionary.word_entries:
        return (Piece(lower),)

    window = min(dictionary.longest_word, MAX_SURFACE_LENGTH)
    # cost[i] spells lower[:i]; back[i] is (start, code) of its last piece
    cost = [_UNREACHED] * (size + 1)
    back = [None] * (size + 1)
    cost[0] = 0
    # A literal from j to i costs cost[j] + glue + 25 + 6 * (i - j); keep the
    # cheapest j-dependent part so each position is O(1) for literals.
    literal_base, literal_start = _UNREACHED, None
    for end in range(1, size + 1):
        start = end - 1
        base = cost[start] + (CODE_WIDTH if start else 0) + literal_bits("") - CHAR_WIDTH * start
        if base < literal_base:
            literal_base, literal_start = base, start
        cost[end] = literal_base + CHAR_WIDTH * end
        back[end] = (literal_start, None)
        for start in range(max(0, end - window), end):
            code = dictionary.lookup_code(lower[start:end])
            # a lone apostrophe or hyphen would hit the punctuation block
            if code is None or code < PUNCTUATION_ENTRY_COUNT:
                continue
            bits = cost[start] + (CODE_WIDTH if start else 0) + CODE_WIDTH
            if bits < cost[end]:
                cost[end] = bits
                back[end] = (start, code)

    pieces = []
    end = size
    while end:
        start, code = back[end]
        pieces.append(Piece(lower[start:end], code))
        end = start
    return tuple(reversed(pieces))
