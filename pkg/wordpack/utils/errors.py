from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    FAILURE = 1
    USAGE = 2
    IO = 3
    FORMAT = 4
    WRONG_DICTIONARY = 5
    CORRUPTION = 6
    TRUNCATION = 7
    INVALID_WORD = 8
    CAPACITY = 9


class WordpackError(Exception):
    """
    Base class for every error raised by wordpack.
    Notes:
      `exit_code` is the status the command-line tool exits with when the
      error reaches it.
    """

    exit_code = ExitCode.FAILURE


class RangeError(WordpackError, ValueError):
    pass


class ClassificationError(WordpackError, ValueError):
    pass


class ConsistencyError(WordpackError):
    pass


class ConfigurationError(WordpackError):
    exit_code = ExitCode.USAGE


class FormatError(WordpackError):
    exit_code = ExitCode.FORMAT


class WrongDictionaryError(WordpackError):
    exit_code = ExitCode.WRONG_DICTIONARY

    def __init__(self, expected_digest, actual_digest):
        super().__init__(
            f"container was written with dictionary {expected_digest:016x}, "
            f"got {actual_digest:016x}"
        )
        self.expected_digest = expected_digest
        self.actual_digest = actual_digest


class CorruptionError(WordpackError):
    exit_code = ExitCode.CORRUPTION


class StructureError(CorruptionError):
    pass


class TruncationError(WordpackError):
    exit_code = ExitCode.TRUNCATION


class InvalidWordError(WordpackError):
    exit_code = ExitCode.INVALID_WORD

    def __init__(self, word, line_number=None, character=None):
        where = f"line {line_number}: " if line_number is not None else ""
        if character is not None:
            message = f"{where}invalid character {character!r} in word {word!r}"
        else:
            message = f"{where}malformed word {word!r}"
        super().__init__(message)
        self.word = word
        self.line_number = line_number
        self.character = character


class CapacityError(WordpackError):
    exit_code = ExitCode.CAPACITY
