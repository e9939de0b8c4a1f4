from wordpack.bitstream import BitBuffer
from wordpack.codec import EncodeOptions, Payload, decode, encode
from wordpack.container import Container, compress, decompress, inspect_container
from wordpack.dictionary import (
    Dictionary,
    build_dictionary,
    load_compiled,
    load_dictionary,
    save_dictionary,
    serialize_compiled,
    table_memory_bits,
)
from wordpack.metrics import (
    BitCost,
    ReductionReport,
    corpus_bench,
    estimate,
    format_percent,
    report_from_counts,
    report_table4,
)
from wordpack.text import detokenize, tokenize
from wordpack.utils.errors import ExitCode, WordpackError
