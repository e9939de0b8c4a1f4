from pathlib import Path

import pytest

from wordpack.dictionary import build_dictionary, harvest_words

CORPUS_DIR = Path(__file__).resolve().parent.parent / "benchmarks" / "corpus"

SAMPLE_SENTENCES = {
    "He is a very good boy.": (176, 133, "24.43"),
    "Sometimes I need some help too.": (248, 133, "46.37"),
    "Although computers may have basic similarities,": (376, 133, "64.63"),
    "Several systematic tabular methods for machine reduction exists.": (512, 171, "66.60"),
}


def corpus_texts():
    return {path.name: path.read_bytes() for path in sorted(CORPUS_DIR.iterdir())}


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS_DIR


@pytest.fixture(scope="session")
def computers_text():
    return (CORPUS_DIR / "computers.txt").read_bytes().rstrip(b"\n")


@pytest.fixture(scope="session")
def corpus_dictionary():
    return build_dictionary(harvest_words(corpus_texts().values()))


@pytest.fixture(scope="session")
def sample_dictionary():
    return build_dictionary(harvest_words(SAMPLE_SENTENCES))


@pytest.fixture
def small_dictionary():
    return build_dictionary(["the", "cat", "sat", "on", "mat", "sun", "bath", "i", "a"])


@pytest.fixture
def dictionary_file(tmp_path, small_dictionary):
    from wordpack.dictionary import save_dictionary

    path = tmp_path / "small.wpkd"
    save_dictionary(small_dictionary, path)
    return path
