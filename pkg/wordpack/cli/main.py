#!/usr/bin/env python3
import argparse
import logging
import sys

from wordpack.cli.commands import (
    cmd_bench,
    cmd_compress,
    cmd_decompress,
    cmd_dict_build,
    cmd_dict_harvest,
    cmd_stats,
)
from wordpack.utils.console import failure
from wordpack.utils.errors import ExitCode, WordpackError


def _add_dictionary_flag(parser):
    parser.add_argument(
        "-d",
        "--dictionary",
        help="Compiled dictionary (.wpkd). Defaults to $WORDPACK_DICTIONARY.",
    )


def _add_level_flag(parser):
    parser.add_argument(
        "--level",
        type=int,
        choices=range(10),
        metavar="0-9",
        help="Deflate level for the second stage. Defaults to $WORDPACK_DEFLATE_LEVEL or 9.",
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wordpack",
        description="Dictionary-coded text compression: words become 19-bit codes, "
        "optionally followed by deflate.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    dict_parser = commands.add_parser("dict", help="Build or harvest dictionaries")
    dict_commands = dict_parser.add_subparsers(dest="dict_command", required=True)
    build = dict_commands.add_parser("build", help="Compile a wordlist into a .wpkd file")
    build.add_argument("wordlist", help="UTF-8 wordlist, one word per line")
    build.add_argument("-o", "--output", required=True, help="Output .wpkd file")
    build.set_defaults(handler=cmd_dict_build)
    harvest = dict_commands.add_parser("harvest", help="Collect the words of some texts")
    harvest.add_argument("texts", nargs="+", help="Text files to read")
    harvest.add_argument("-o", "--output", required=True, help="Output wordlist")
    harvest.set_defaults(handler=cmd_dict_harvest)

    compress = commands.add_parser("compress", help="Compress a text file")
    compress.add_argument("input", help="Text file to compress")
    _add_dictionary_flag(compress)
    compress.add_argument("-o", "--output", required=True, help="Output .wpk file")
    compress.add_argument("--no-deflate", action="store_true", help="Skip the second stage")
    _add_level_flag(compress)
    compress.set_defaults(handler=cmd_compress)

    decompress = commands.add_parser("decompress", help="Restore a .wpk file")
    decompress.add_argument("input", help="Compressed .wpk file")
    _add_dictionary_flag(decompress)
    decompress.add_argument("-o", "--output", required=True, help="Output text file")
    decompress.set_defaults(handler=cmd_decompress)

    stats = commands.add_parser("stats", help="Describe a compiled dictionary")
    stats.add_argument("dictionary_file", help="Compiled dictionary (.wpkd)")
    stats.set_defaults(handler=cmd_stats)

    bench = commands.add_parser("bench", help="Measure reduction over a directory of texts")
    bench.add_argument("corpus", help="Directory of text files")
    _add_dictionary_flag(bench)
    bench.add_argument("--format", choices=("table", "records"), default="table")
    bench.add_argument("--workers", type=int, help="Worker threads. Defaults to $WORDPACK_BENCH_WORKERS or 1.")
    _add_level_flag(bench)
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv=None):
    """
    Runs the wordpack command line.
    Args:
      argv (list, optional): Arguments without the program name. Defaults to sys.argv[1:].
    Returns:
      int: The exit status; see ExitCode.
    """
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    try:
        return int(args.handler(args))
    except WordpackError as e:
        failure(str(e))
        return int(e.exit_code)
    except OSError as e:
        failure(f"{e.filename}: {e.strerror}" if e.filename else str(e))
        return int(ExitCode.IO)


if __name__ == "__main__":
    sys.exit(main())
