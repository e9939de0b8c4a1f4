import pytest

from conftest import CORPUS_DIR
from wordpack.bitstream import BitBuffer
from wordpack.codec import FieldKind, Piece, case_plan, decode, encode, iter_fields, segment_word
from wordpack.container import compress, decompress
from wordpack.dictionary import DictEntry, Dictionary, ReservedKind, build_dictionary
from wordpack.text import Token, detokenize, tokenize
from wordpack.text.tokens import SpacingState
from wordpack.utils.errors import (
    ConsistencyError,
    CorruptionError,
    StructureError,
    TruncationError,
    WordpackError,
)


def codes_of(text, dictionary):
    return [f.value for f in iter_fields(tokenize(text), dictionary) if f.kind is FieldKind.CODE]


def stream(*fields):
    buf = BitBuffer()
    for value, width in fields:
        buf.write_bits(int(value), width)
    return buf.pad_to_byte().seal()


def code(value):
    return (value, 19)


EOS = code(ReservedKind.END_OF_STREAM)


def test_sample_sentence_payload(sample_dictionary):
    payload = encode(tokenize(b"He is a very good boy."), sample_dictionary)
    assert payload.token_count == 7
    assert payload.content_bit_length == 133
    assert payload.unpadded_bit_length == 152
    assert len(payload.bytes) == 19


def test_empty_payload(small_dictionary):
    payload = encode([], small_dictionary)
    assert payload.token_count == 0
    assert payload.bytes == b"\xff\xe1\x80"
    assert decode(payload, small_dictionary) == []


@pytest.mark.parametrize(
    "text",
    [
        b"The cat sat on the mat.",
        b"the cat sat.",
        b"THE CAT SAT ON THE MAT",
        b"tHE cAT sat",
        b"The NASA cat",
        b"McDonald sat on iPhone mats.",
        b"I sat. i sat, on I",
        b"a sunbath, Sunbath, SUNBATH",
        b"hello-world don't x  y\n\tz",
        b"  leading and trailing  ",
        "caf\xe9 na\xefve \xe2\x82\xac42".encode("latin-1"),
        b"McDonald42 THE",
        b"so I AM ON",
    ],
)
def test_round_trip(text, small_dictionary):
    tokens = tokenize(text)
    payload = encode(tokens, small_dictionary)
    decoded = decode(payload, small_dictionary)
    assert decoded == tokens
    assert detokenize(decoded) == text


def test_case_tokens(small_dictionary):
    d = small_dictionary
    the, cat = d.lookup_code("the"), d.lookup_code("cat")
    assert codes_of(b"The cat", d) == [the, cat]
    assert codes_of(b"the cat", d) == [ReservedKind.CASE_TITLE_SINGLE, the, cat]
    assert codes_of(b"so The", d)[-2:] == [ReservedKind.CASE_TITLE_SINGLE, the]
    assert codes_of(b"THE cat", d) == [ReservedKind.CASE_UPPER_SINGLE, the, cat]
    assert codes_of(b"THE CAT", d) == [
        ReservedKind.CASE_UPPER_BEGIN,
        the,
        cat,
        ReservedKind.CASE_UPPER_END,
    ]
    assert codes_of(b"tHE cAT", d) == [
        ReservedKind.CASE_TOGGLE_BEGIN,
        the,
        cat,
        ReservedKind.CASE_TOGGLE_END,
    ]
    assert codes_of(b"tHE cat", d) == [ReservedKind.CASE_TOGGLE_SINGLE, the, cat]


def test_pronoun_needs_no_case_token(small_dictionary):
    i = small_dictionary.lookup_code("i")
    assert codes_of(b"The cat I sat", small_dictionary)[2] == i
    assert codes_of(b"The cat i sat", small_dictionary)[2:4] == [ReservedKind.CASE_TITLE_SINGLE, i]
    assert codes_of(b"i sat", small_dictionary)[:2] == [ReservedKind.CASE_TITLE_SINGLE, i]


def test_mixed_case_goes_raw(small_dictionary):
    fields = list(iter_fields(tokenize(b"McDonald"), small_dictionary))
    assert fields[0].value == ReservedKind.RAW_BEGIN
    assert fields[1].value == len(b"McDonald")
    assert bytes(f.value for f in fields[2:]) == b"McDonald"
    plan = case_plan(Token.word("iPhone"), SpacingState(False))
    assert plan.raw_escape


def test_literal_escape(small_dictionary):
    fields = list(iter_fields(tokenize(b"The dog"), small_dictionary))[1:]
    assert [f.value for f in fields] == [ReservedKind.LITERAL_BEGIN, 4, 15, 7, 0]
    assert sum(f.width for f in fields) == 19 + 3 * 6 + 6


def test_compound_word_uses_glue(small_dictionary):
    d = small_dictionary
    assert codes_of(b"The sunbath", d)[1:] == [
        d.lookup_code("sun"),
        ReservedKind.NO_SPACE,
        d.lookup_code("bath"),
    ]
    assert [piece.text for piece in segment_word("catmat", d)] == ["cat", "mat"]


def test_segmentation_prefers_a_single_literal_when_cheaper(small_dictionary):
    pieces = segment_word("tacat", small_dictionary)
    # "ta" as a literal plus glue plus "cat" costs 19+12+6 + 19 + 19 = 75 bits,
    # the whole word as a literal 19+30+6 = 55
    assert len(pieces) == 1 and pieces[0].code is None


def test_removing_a_word_never_shrinks_the_payload(small_dictionary):
    text = b"The cat sat on the mat, and the sun sat on the cat. Sunbath!"
    full = encode(tokenize(text), small_dictionary).content_bit_length
    words = [entry.surface for entry in small_dictionary.word_entries]
    for missing in words:
        reduced = build_dictionary([w for w in words if w != missing])
        assert encode(tokenize(text), reduced).content_bit_length >= full


def test_unassigned_code(small_dictionary):
    buf = stream(code(len(small_dictionary) + 5), EOS)
    with pytest.raises(CorruptionError):
        decode(buf, small_dictionary)


@pytest.mark.parametrize(
    "fields",
    [
        [code(ReservedKind.CASE_UPPER_END), EOS],
        [code(ReservedKind.CASE_UPPER_SINGLE), code(0), EOS],
        [code(ReservedKind.CASE_UPPER_BEGIN), code(54), code(ReservedKind.CASE_UPPER_END), EOS],
        [code(ReservedKind.CASE_TOGGLE_BEGIN), code(54), code(55), code(ReservedKind.CASE_UPPER_END), EOS],
        [code(ReservedKind.CASE_TITLE_SINGLE), EOS],
        [code(ReservedKind.CASE_TITLE_SINGLE), code(ReservedKind.CASE_UPPER_SINGLE), code(54), EOS],
        [code(ReservedKind.NO_SPACE), EOS],
        [code(54), code(ReservedKind.NO_SPACE), code(0), EOS],
        [code(ReservedKind.CASE_UPPER_SINGLE), code(ReservedKind.RAW_BEGIN), (1, 32), (0x31, 8), EOS],
    ],
)
def test_malformed_structure(fields, small_dictionary):
    with pytest.raises(StructureError):
        decode(stream(*fields), small_dictionary)


def test_empty_literal(small_dictionary):
    buf = stream(code(ReservedKind.LITERAL_BEGIN), (0, 6), EOS)
    with pytest.raises(CorruptionError):
        decode(buf, small_dictionary)


def test_literal_with_digits_is_not_a_word(small_dictionary):
    buf = stream(code(ReservedKind.LITERAL_BEGIN), (1, 6), (27, 6), (0, 6), EOS)
    with pytest.raises(StructureError):
        decode(buf, small_dictionary)


def test_zero_length_raw(small_dictionary):
    buf = stream(code(ReservedKind.RAW_BEGIN), (0, 32), EOS)
    with pytest.raises(CorruptionError):
        decode(buf, small_dictionary)


def test_raw_length_past_end(small_dictionary):
    buf = stream(code(ReservedKind.RAW_BEGIN), (1000, 32), (0x31, 8), EOS)
    with pytest.raises(TruncationError):
        decode(buf, small_dictionary)


def test_missing_terminator(small_dictionary):
    buf = stream(code(54), code(55))
    with pytest.raises(TruncationError):
        decode(buf, small_dictionary)


def test_data_after_terminator(small_dictionary):
    buf = stream(code(54), EOS, code(55))
    with pytest.raises(CorruptionError):
        decode(buf, small_dictionary)


def test_decode_accepts_plain_bytes(small_dictionary):
    payload = encode(tokenize(b"the cat"), small_dictionary)
    assert decode(payload.bytes, small_dictionary) == tokenize(b"the cat")


def test_payload_counts_literals_and_raw_bytes(small_dictionary):
    text = b"The zebra sat 42 times."
    payload = encode(tokenize(text), small_dictionary)
    # The, LITERAL_BEGIN, sat, SPACE_EXPLICIT, RAW_BEGIN, SPACE_EXPLICIT, LITERAL_BEGIN, "."
    assert payload.token_count == 8
    assert payload.literal_char_count == len("zebra") + len("times")
    assert payload.raw_byte_count == len("42")
    assert payload.content_bit_length == 8 * 19 + 2 * (5 * 6 + 6) + 32 + 2 * 8
    assert detokenize(decode(payload, small_dictionary)) == text


def test_dictionary_codes_carry_no_literals_or_raw(small_dictionary):
    payload = encode(tokenize(b"The cat sat on the mat."), small_dictionary)
    assert (payload.literal_char_count, payload.raw_byte_count) == (0, 0)


def test_missing_punctuation_entry_is_a_consistency_error():
    dictionary = Dictionary.from_entries([DictEntry(0, "a")])
    with pytest.raises(ConsistencyError, match="punctuation"):
        encode(tokenize(b"a."), dictionary)
    assert issubclass(ConsistencyError, WordpackError)


@pytest.mark.parametrize("coverage", ["empty", "full"])
def test_transfer_paragraph_round_trips(coverage, corpus_dictionary):
    text = (CORPUS_DIR / "transfer.txt").read_bytes()
    dictionary = corpus_dictionary if coverage == "full" else build_dictionary([])
    tokens = tokenize(text)
    decoded = decode(encode(tokens, dictionary), dictionary)
    assert decoded == tokens
    assert detokenize(decoded) == text
    repeated = b" ".join([text.rstrip(b"\n")] * 32)
    assert decompress(compress(repeated, dictionary), dictionary) == repeated


def test_segmentation_window_follows_the_longest_word(small_dictionary):
    assert small_dictionary.longest_word == 4
    assert build_dictionary([]).longest_word == 0
    run = "sunbath" * 500
    # per 7 letters a literal costs 42 bits, two codes and two glues 76
    assert segment_word(run, small_dictionary) == (Piece(run),)
