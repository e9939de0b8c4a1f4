from pathlib import Path

from wordpack.codec import EncodeOptions, encode
from wordpack.container import decompress, frame_payload
from wordpack.dictionary import (
    build_dictionary,
    harvest_words,
    load_dictionary,
    read_wordlist,
    save_dictionary,
)
from wordpack.dictionary.table_memory import (
    describe_bits,
    full_table_memory_bits,
    table_memory_bits,
)
from wordpack.metrics import (
    corpus_bench,
    format_percent,
    list_corpus,
    render_records,
    render_table,
    report_for_payload,
)
from wordpack.second_stage import DeflateStage
from wordpack.text import tokenize
from wordpack.utils.config import default_dictionary_path
from wordpack.utils.console import done, failure, heading, progress, warning
from wordpack.utils.errors import ConfigurationError, ExitCode


def _dictionary_from(args):
    path = args.dictionary or default_dictionary_path()
    if not path:
        raise ConfigurationError("no dictionary given: pass -d or set WORDPACK_DICTIONARY")
    progress(f"Loading dictionary {path}...")
    return load_dictionary(path)


def _memory_line(entry_count, average):
    return describe_bits(table_memory_bits(entry_count, average or 0))


def cmd_dict_build(args):
    """
    Compiles a wordlist into a `.wpkd` dictionary.
    Prints the entry count, digest and table memory to stdout.
    """
    progress(f"Reading wordlist {args.wordlist}...")
    dictionary = build_dictionary(read_wordlist(args.wordlist))
    if not dictionary.word_entries:
        warning("wordlist has no words, the dictionary holds punctuation only")
    save_dictionary(dictionary, args.output)
    print(f"entries: {len(dictionary)}")
    print(f"digest: {dictionary.digest:016x}")
    print(f"table memory: {_memory_line(len(dictionary), dictionary.average_word_length)}")
    done(f"Dictionary written to {args.output}")
    return ExitCode.SUCCESS


def cmd_dict_harvest(args):
    progress(f"Harvesting words from {len(args.texts)} file(s)...")
    words = harvest_words(Path(path).read_bytes() for path in args.texts)
    Path(args.output).write_text("".join(f"{word}\n" for word in words), encoding="utf-8")
    print(f"words: {len(words)}")
    done(f"Wordlist written to {args.output}")
    return ExitCode.SUCCESS


def cmd_compress(args):
    dictionary = _dictionary_from(args)
    options = EncodeOptions(second_stage=not args.no_deflate, compression_level=args.level)
    text = Path(args.input).read_bytes()
    progress(f"Compressing {args.input}...")
    tokens = tokenize(text)
    payload = encode(tokens, dictionary)
    blob = frame_payload(payload, dictionary, options)
    Path(args.output).write_bytes(blob)
    stage = DeflateStage(options.compression_level)
    report = report_for_payload(text, tokens, payload, stage, args.input)
    heading("Size reduction")
    print(f"words: {report.word_count}")
    print(f"punctuation: {report.punct_count}")
    print(f"codes: {report.token_count}")
    print(f"general bytes: {report.general_bytes}")
    print(f"reduced bytes: {report.reduced_bytes}")
    print(f"saved bytes: {report.saved_bytes}")
    print(f"reduction: {format_percent(report.percent)}%")
    print(f"container bytes: {len(blob)}")
    done(f"Compressed file written to {args.output}")
    return ExitCode.SUCCESS


def cmd_decompress(args):
    dictionary = _dictionary_from(args)
    blob = Path(args.input).read_bytes()
    progress(f"Decompressing {args.input}...")
    text = decompress(blob, dictionary)
    Path(args.output).write_bytes(text)
    done(f"Decompressed file written to {args.output}")
    return ExitCode.SUCCESS


def cmd_stats(args):
    dictionary = load_dictionary(args.dictionary_file)
    average = dictionary.average_word_length
    heading(f"Dictionary {args.dictionary_file}")
    print(f"entries: {len(dictionary)}")
    print(f"words: {len(dictionary.word_entries)}")
    print(f"digest: {dictionary.digest:016x}")
    print("buckets:")
    for name, size in dictionary.bucket_histogram().items():
        print(f"  {name}: {size}")
    rendered = "N/A" if average is None else f"{float(average):.2f}"
    print(f"average word length: {rendered}")
    print(f"table memory: {_memory_line(len(dictionary), average)}")
    print(f"full table memory: {describe_bits(full_table_memory_bits(average or 0))}")
    return ExitCode.SUCCESS


def cmd_bench(args):
    paths = list_corpus(args.corpus)
    if not paths:
        warning(f"no files in {args.corpus}")
        return ExitCode.SUCCESS
    dictionary = _dictionary_from(args)
    options = EncodeOptions(compression_level=args.level)
    progress(f"Measuring {len(paths)} file(s)...")
    result = corpus_bench(paths, dictionary, options, args.workers)
    for report in result.reports:
        if not report.ok:
            failure(f"{report.path}: {report.error}")
    if args.format == "records":
        print(render_records(result))
    else:
        heading("Corpus reduction")
        print(render_table(result))
    done(f"Measured {len(result.succeeded)} of {len(paths)} file(s)")
    return ExitCode.SUCCESS
