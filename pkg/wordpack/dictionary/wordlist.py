from wordpack.dictionary.alphabet import MAX_SURFACE_LENGTH
from wordpack.text.tokenizer import tokenize
from wordpack.text.tokens import TokenKind


def read_wordlist(path):
    """
    Reads a wordlist file.
    Args:
      path (str or Path): UTF-8 text, one word per line.
    Returns:
      list: The lines, newline characters stripped. Undecodable bytes become
      U+FFFD so the builder can point at them.
    """
    with open(path, "r", encoding="utf-8", errors="replace") as f:
        return f.read().splitlines()


# Collect the vocabulary of sample texts, e.g. to build a coverage dictionary
def harvest_words(texts):
    """
    Lists the distinct words of some texts, lowercased, in first-seen order.
    Args:
      texts (iterable): Byte strings or str.
    Returns:
      list: Lowercase word surfaces that fit a dictionary entry.
    Examples:
      >>> harvest_words([b"He is a very good boy. He is."])
      ['he', 'is', 'a', 'very', 'good', 'boy']
    """
    seen = {}
    for text in texts:
        for token in tokenize(text):
            if token.kind is TokenKind.WORD and len(token.surface) <= MAX_SURFACE_LENGTH:
                seen.setdefault(token.surface.lower(), None)
    return list(seen)
