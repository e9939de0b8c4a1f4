from enum import Enum

from wordpack.utils.errors import ClassificationError

# The pronoun keeps its capital everywhere, so its default rendering is "I"
CAPITALISED_WORDS = frozenset({"i"})


class CaseClass(Enum):
    LOWER = "lower"
    SENTENCE = "sentence"
    UPPER = "upper"
    TITLE = "title"
    TOGGLE = "toggle"
    OTHER = "other"


def classify_case(surface, expects_sentence_case=False):
    """
    Classifies the letter case pattern of a word.
    Args:
      surface (str): The word as written.
      expects_sentence_case (bool, optional): Whether the word sits where a
        sentence starts. Only matters for one-letter capitals. Defaults to False.
    Returns:
      CaseClass: LOWER, SENTENCE, UPPER, TOGGLE or OTHER. TITLE is never
      returned for a single word; the codec decides title rendering.
    Raises:
      ClassificationError: If `surface` has no letters.
    Examples:
      >>> classify_case("and"), classify_case("He"), classify_case("tOGGLE")
      (<CaseClass.LOWER: 'lower'>, <CaseClass.SENTENCE: 'sentence'>, <CaseClass.TOGGLE: 'toggle'>)
      >>> classify_case("A"), classify_case("A", expects_sentence_case=True)
      (<CaseClass.UPPER: 'upper'>, <CaseClass.SENTENCE: 'sentence'>)
    """
    letters = [char for char in surface if char.isascii() and char.isalpha()]
    if not letters:
        raise ClassificationError(f"no letters to classify in {surface!r}")
    first, rest = letters[0], letters[1:]
    if all(char.islower() for char in letters):
        return CaseClass.LOWER
    if not rest:
        return CaseClass.SENTENCE if expects_sentence_case else CaseClass.UPPER
    if all(char.isupper() for char in letters):
        return CaseClass.UPPER
    if first.isupper() and all(char.islower() for char in rest):
        return CaseClass.SENTENCE
    if first.islower():
        return CaseClass.TOGGLE
    return CaseClass.OTHER


def _swap_first_letter(surface, convert):
    for index, char in enumerate(surface):
        if char.isalpha():
            return surface[:index] + convert(char) + surface[index + 1 :]
    return surface


def capitalise_initial(lower):
    return _swap_first_letter(lower, str.upper)


def flip_initial(form):
    return _swap_first_letter(form, str.swapcase)


def toggle_form(lower):
    """
    First letter lower, every later letter upper: "toggle" -> "tOGGLE".
    """
    upper = lower.upper()
    return _swap_first_letter(upper, str.lower)


def natural_form(lower, expects_sentence_case):
    """
    How a lowercase surface is rendered when no case token escorts it.
    Examples:
      >>> natural_form("he", True), natural_form("he", False), natural_form("i", False)
      ('He', 'he', 'I')
    """
    if expects_sentence_case or lower in CAPITALISED_WORDS:
        return capitalise_initial(lower)
    return lower
