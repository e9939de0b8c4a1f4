from dataclasses import dataclass
from fractions import Fraction

from wordpack.codec.emission import FieldKind, iter_fields
from wordpack.dictionary.reserved import CODE_WIDTH
from wordpack.text import detokenize
from wordpack.text.tokens import TokenKind


def reduction_percent(general, reduced):
    """
    Exact reduction percentage, (general - reduced) / general * 100.
    Returns:
      Fraction or None: None when `general` is zero.
    """
    if not general:
        return None
    return Fraction(general - reduced, general) * 100


@dataclass(frozen=True)
class BitCost:
    """
    Sizes of a token stream before and after reduction, in bits.

    `reduced_bits` excludes the END_OF_STREAM terminator; `framed_bits` adds it.
    """

    general_bits: int
    reduced_bits: int
    token_count: int
    word_count: int = 0
    punct_count: int = 0

    @property
    def framed_bits(self):
        return self.reduced_bits + CODE_WIDTH

    @property
    def percent(self):
        return reduction_percent(self.general_bits, self.reduced_bits)


def estimate(tokens, dictionary):
    """
    Computes the reduced size of a token stream without writing any bits.
    Args:
      tokens (iterable): Token objects.
      dictionary (Dictionary): The lookup table.
    Returns:
      BitCost: General size (8 bits per character of the detokenized text) and
      the exact size `encode` produces before its terminator.
    Examples:
      >>> from wordpack.dictionary import build_dictionary
      >>> from wordpack.text import tokenize
      >>> d = build_dictionary("he is a very good boy".split())
      >>> cost = estimate(tokenize("He is a very good boy."), d)
      >>> cost.general_bits, cost.reduced_bits, float(round(cost.percent, 2))
      (176, 133, 24.43)
    """
    tokens = list(tokens)
    reduced_bits = 0
    token_count = 0
    for field in iter_fields(tokens, dictionary):
        reduced_bits += field.width
        if field.kind is FieldKind.CODE:
            token_count += 1
    return BitCost(
        general_bits=8 * len(detokenize(tokens)),
        reduced_bits=reduced_bits,
        token_count=token_count,
        word_count=sum(1 for token in tokens if token.kind is TokenKind.WORD),
        punct_count=sum(1 for token in tokens if token.kind is TokenKind.PUNCT),
    )
