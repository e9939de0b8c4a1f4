import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from wordpack.codec import encode
from wordpack.dictionary.reserved import CODE_WIDTH
from wordpack.metrics.bit_cost import reduction_percent
from wordpack.second_stage import DeflateStage
from wordpack.text import tokenize
from wordpack.text.tokens import TokenKind
from wordpack.utils.errors import RangeError

NOT_AVAILABLE = "N/A"


def format_percent(value):
    """
    Renders a percentage with 2 decimals, rounding half away from zero.
    Examples:
      >>> from fractions import Fraction
      >>> format_percent(Fraction(24300, 376)), format_percent(None)
      ('64.63', 'N/A')
    """
    if value is None:
        return NOT_AVAILABLE
    value = Fraction(value)
    hundredths = math.floor(abs(value) * 100 + Fraction(1, 2))
    rendered = Decimal(hundredths).scaleb(-2)
    return str(-rendered if value < 0 and hundredths else rendered)


@dataclass(frozen=True)
class ReductionReport:
    """
    One column of the size-reduction table, in bytes.

    Bench reports also carry the source `path`, the deflated payload size, the
    size of deflate alone on the raw text, or the `error` that stopped the file.
    """

    general_bytes: int = 0
    reduced_bytes: int = 0
    word_count: int = 0
    punct_count: int = 0
    token_count: int = 0
    bits_per_code: int = CODE_WIDTH
    path: str = None
    reduced_deflated_bytes: int = None
    raw_deflated_bytes: int = None
    error: str = None

    @property
    def saved_bytes(self):
        return self.general_bytes - self.reduced_bytes

    @property
    def words_with_punctuation(self):
        return self.word_count + self.punct_count

    @property
    def percent(self):
        if self.error is not None:
            return None
        return reduction_percent(self.general_bytes, self.reduced_bytes)

    @property
    def ok(self):
        return self.error is None


def report_from_counts(word_count, punct_count, general_bytes):
    """
    Size-reduction row for a text of known word and punctuation counts.
    Args:
      word_count (int): Number of words.
      punct_count (int): Number of punctuation marks.
      general_bytes (int): Size of the text, one byte per character.
    Returns:
      ReductionReport: Reduced size of one 19-bit code per word and mark,
      rounded up to whole bytes.
    Examples:
      >>> row = report_from_counts(3984, 361, 23378)
      >>> row.reduced_bytes, format_percent(row.percent)
      (10320, '55.86')
    """
    for name, value in (
        ("word_count", word_count),
        ("punct_count", punct_count),
        ("general_bytes", general_bytes),
    ):
        if value < 0:
            raise RangeError(f"{name} must be non-negative, got {value}")
    codes = word_count + punct_count
    return ReductionReport(
        general_bytes=general_bytes,
        reduced_bytes=math.ceil(codes * CODE_WIDTH / 8),
        word_count=word_count,
        punct_count=punct_count,
        token_count=codes,
    )


report_table4 = report_from_counts


def report_for_payload(data, tokens, payload, stage=None, path=None):
    """
    Report for a text that has already been tokenized and encoded.
    Args:
      data (bytes): The text.
      tokens (list): `tokenize(data)`.
      payload (Payload): `encode(tokens, dictionary)`.
      stage (BaseSecondStage, optional): Second stage to measure. Defaults to
        a DeflateStage at the configured level.
      path (str, optional): Recorded in the report.
    Returns:
      ReductionReport: Sizes of the text, the padded code payload, the
      payload after the second stage and the second stage alone on the text.
    """
    if stage is None:
        stage = DeflateStage()
    return ReductionReport(
        general_bytes=len(data),
        reduced_bytes=len(payload.bytes),
        word_count=sum(1 for token in tokens if token.kind is TokenKind.WORD),
        punct_count=sum(1 for token in tokens if token.kind is TokenKind.PUNCT),
        token_count=payload.token_count,
        path=None if path is None else str(path),
        reduced_deflated_bytes=len(stage.compress(payload.bytes)),
        raw_deflated_bytes=len(stage.compress(data)),
    )


def report_for_text(text, dictionary, stage=None, path=None):
    """
    Measures one text end to end.
    Args:
      text (bytes or str): The text.
      dictionary (Dictionary): The lookup table.
      stage (BaseSecondStage, optional): Second stage to measure. Defaults to
        a DeflateStage at the configured level.
      path (str, optional): Recorded in the report.
    Returns:
      ReductionReport: See `report_for_payload`.
    """
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    tokens = tokenize(data)
    return report_for_payload(data, tokens, encode(tokens, dictionary), stage, path)
