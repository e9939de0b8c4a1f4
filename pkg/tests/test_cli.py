import pytest

from wordpack.cli.main import main
from wordpack.container import HEADER, decompress
from wordpack.dictionary import load_dictionary, save_dictionary, build_dictionary
from wordpack.utils.errors import ExitCode


@pytest.fixture
def wordlist(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("the\ncat\nsat\n", encoding="utf-8")
    return path


def test_dict_build(tmp_path, wordlist, capsys):
    out = tmp_path / "words.wpkd"
    assert main(["dict", "build", str(wordlist), "-o", str(out)]) == ExitCode.SUCCESS
    assert len(load_dictionary(out)) == 57
    stdout = capsys.readouterr().out
    assert "entries: 57" in stdout
    assert "table memory:" in stdout


def test_dict_build_invalid_word(tmp_path, capsys):
    wordlist = tmp_path / "words.txt"
    wordlist.write_text("cat\nCafé\n", encoding="utf-8")
    code = main(["dict", "build", str(wordlist), "-o", str(tmp_path / "x.wpkd")])
    assert code == ExitCode.INVALID_WORD
    err = capsys.readouterr().err
    assert "line 2" in err and "é" in err


def test_dict_build_empty_list_warns(tmp_path, capsys):
    wordlist = tmp_path / "empty.txt"
    wordlist.write_text("", encoding="utf-8")
    out = tmp_path / "empty.wpkd"
    assert main(["dict", "build", str(wordlist), "-o", str(out)]) == ExitCode.SUCCESS
    assert len(load_dictionary(out)) == 54
    assert "warning" in capsys.readouterr().err


def test_dict_harvest(tmp_path):
    text = tmp_path / "a.txt"
    text.write_bytes(b"The cat sat. The dog ran!")
    out = tmp_path / "words.txt"
    assert main(["dict", "harvest", str(text), "-o", str(out)]) == ExitCode.SUCCESS
    assert out.read_text(encoding="utf-8").split() == ["the", "cat", "sat", "dog", "ran"]


@pytest.mark.parametrize("flags", [[], ["--no-deflate"], ["--level", "1"]])
def test_compress_round_trip(tmp_path, dictionary_file, flags, capsys):
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat sat on the mat.\n\tThe SUN  sat, 42 times!")
    packed = tmp_path / "in.wpk"
    restored = tmp_path / "out.txt"
    assert main(["compress", str(source), "-d", str(dictionary_file), "-o", str(packed)] + flags) == 0
    assert "reduction:" in capsys.readouterr().out
    assert main(["decompress", str(packed), "-d", str(dictionary_file), "-o", str(restored)]) == 0
    assert restored.read_bytes() == source.read_bytes()


def test_dictionary_from_environment(tmp_path, dictionary_file, monkeypatch):
    monkeypatch.setenv("WORDPACK_DICTIONARY", str(dictionary_file))
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat.")
    assert main(["compress", str(source), "-o", str(tmp_path / "in.wpk")]) == 0


def test_no_dictionary_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.delenv("WORDPACK_DICTIONARY", raising=False)
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat.")
    assert main(["compress", str(source), "-o", str(tmp_path / "in.wpk")]) == ExitCode.USAGE


def test_bad_environment_is_a_usage_error(tmp_path, dictionary_file, monkeypatch):
    monkeypatch.setenv("WORDPACK_DEFLATE_LEVEL", "eleven")
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat.")
    code = main(["compress", str(source), "-d", str(dictionary_file), "-o", str(tmp_path / "o.wpk")])
    assert code == ExitCode.USAGE


def test_missing_files_are_io_errors(tmp_path, dictionary_file):
    assert main(["compress", str(tmp_path / "nope.txt"), "-d", str(dictionary_file), "-o", str(tmp_path / "o")]) == ExitCode.IO
    source = tmp_path / "in.txt"
    source.write_bytes(b"x")
    assert main(["compress", str(source), "-d", str(tmp_path / "nope.wpkd"), "-o", str(tmp_path / "o")]) == ExitCode.IO


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        main(["compress"])
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["compress", "in", "-o", "out", "--level", "12"])
    assert excinfo.value.code == 2


def _packed(tmp_path, dictionary_file):
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat sat on the mat. The cat sat.")
    packed = tmp_path / "in.wpk"
    assert main(["compress", str(source), "-d", str(dictionary_file), "-o", str(packed), "--no-deflate"]) == 0
    return packed


def _decompress(tmp_path, packed, dictionary_file):
    return main(["decompress", str(packed), "-d", str(dictionary_file), "-o", str(tmp_path / "out.txt")])


def test_wrong_dictionary_exit_code(tmp_path, dictionary_file, capsys):
    packed = _packed(tmp_path, dictionary_file)
    other = tmp_path / "other.wpkd"
    save_dictionary(build_dictionary(["dog"]), other)
    assert _decompress(tmp_path, packed, other) == ExitCode.WRONG_DICTIONARY
    assert "dictionary" in capsys.readouterr().err


def test_negative_path_exit_codes(tmp_path, dictionary_file):
    packed = _packed(tmp_path, dictionary_file)
    blob = packed.read_bytes()

    packed.write_bytes(b"ZIP!" + blob[4:])
    assert _decompress(tmp_path, packed, dictionary_file) == ExitCode.FORMAT

    packed.write_bytes(blob[:-2])
    assert _decompress(tmp_path, packed, dictionary_file) == ExitCode.TRUNCATION

    # the first code becomes an unassigned one
    body = bytearray(blob[HEADER.size :])
    body[0] = 0x7F
    body[1] = 0xE0
    packed.write_bytes(blob[: HEADER.size] + bytes(body))
    assert _decompress(tmp_path, packed, dictionary_file) == ExitCode.CORRUPTION


def test_stats(dictionary_file, capsys):
    assert main(["stats", str(dictionary_file)]) == 0
    stdout = capsys.readouterr().out
    assert "entries: 63" in stdout
    assert "average word length:" in stdout
    assert "OTHER: 54" in stdout


def test_stats_full_table_memory(tmp_path, capsys):
    path = tmp_path / "seven.wpkd"
    save_dictionary(build_dictionary(["abcdefg", "hijklmn", "opqrstu"]), path)
    assert main(["stats", str(path)]) == 0
    stdout = capsys.readouterr().out
    assert "average word length: 7.00" in stdout
    assert "full table memory: 35127296 bits = 4390912 bytes = 4288 KB = 4.1875 MB" in stdout


def test_bench(corpus_dir, tmp_path, capsys):
    wordlist = tmp_path / "corpus.txt"
    paths = [str(path) for path in sorted(corpus_dir.iterdir())]
    assert main(["dict", "harvest", *paths, "-o", str(wordlist)]) == 0
    compiled = tmp_path / "corpus.wpkd"
    assert main(["dict", "build", str(wordlist), "-o", str(compiled)]) == 0
    capsys.readouterr()
    assert main(["bench", str(corpus_dir), "-d", str(compiled)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[-1].startswith("average reduction: ")
    average = lines[-1].split(": ")[1].rstrip("%")
    assert len(average.split(".")[1]) == 2
    assert main(["bench", str(corpus_dir), "-d", str(compiled), "--format", "records", "--workers", "2"]) == 0
    records = capsys.readouterr().out.splitlines()
    assert len(records) == 9


def test_bench_empty_dir(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["bench", str(empty)]) == 0
    assert "no files" in capsys.readouterr().err


def test_compress_encodes_once(tmp_path, dictionary_file, monkeypatch, capsys):
    import wordpack.cli.commands as commands

    calls = []
    real_encode = commands.encode

    def counting_encode(tokens, dictionary):
        payload = real_encode(tokens, dictionary)
        calls.append(payload)
        return payload

    monkeypatch.setattr(commands, "encode", counting_encode)
    source = tmp_path / "in.txt"
    source.write_bytes(b"The cat sat on the mat.")
    packed = tmp_path / "in.wpk"
    assert main(["compress", str(source), "-d", str(dictionary_file), "-o", str(packed)]) == 0
    assert len(calls) == 1
    assert f"codes: {calls[0].token_count}" in capsys.readouterr().out
    dictionary = load_dictionary(dictionary_file)
    assert decompress(packed.read_bytes(), dictionary) == source.read_bytes()
