from wordpack.dictionary.alphabet import (
    LITERAL_ALPHABET,
    PUNCTUATION_SYMBOLS,
    char_to_code6,
    code6_to_char,
)
from wordpack.dictionary.reserved import (
    CODE_WIDTH,
    RESERVED_BASE,
    ReservedKind,
    ReservedToken,
)
from wordpack.dictionary.word_lookup_table import (
    MAX_ENTRIES,
    PUNCTUATION_ENTRY_COUNT,
    DictEntry,
    Dictionary,
    build_dictionary,
    lookup_code,
    lookup_surface,
)
from wordpack.dictionary.compiled_format import (
    load_compiled,
    load_dictionary,
    save_dictionary,
    serialize_compiled,
)
from wordpack.dictionary.table_memory import describe_bits, table_memory_bits
from wordpack.dictionary.wordlist import harvest_words, read_wordlist
