from wordpack.cli.main import build_parser, main
