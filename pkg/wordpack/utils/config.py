import os
from dotenv import load_dotenv

from wordpack.utils.errors import ConfigurationError

load_dotenv()


def _int_setting(name, default, low, high):
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if not low <= value <= high:
        raise ConfigurationError(f"{name} must be in {low}..{high}, got {value}")
    return value


def default_dictionary_path():
    """
    Dictionary used when `-d/--dictionary` is not given.
    Returns:
      str or None: The value of WORDPACK_DICTIONARY, or None when unset.
    """
    return os.getenv("WORDPACK_DICTIONARY") or None


def default_deflate_level():
    return _int_setting("WORDPACK_DEFLATE_LEVEL", 9, 0, 9)


def default_bench_workers():
    return _int_setting("WORDPACK_BENCH_WORKERS", 1, 1, 64)
