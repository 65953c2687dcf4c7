"""Text normalization used for lemma lookup and choice comparison.

Lemmas are compared on NFC-normalized form with Latin-script characters
lowercased and everything else (CJK in particular) left untouched.
"""

import unicodedata


def _lower_latin(ch: str) -> str:
    if ch.isascii():
        return ch.lower()
    name = unicodedata.name(ch, "")
    return ch.lower() if name.startswith("LATIN") else ch


def normalize_lemma(s: str) -> str:
    """NFC plus Latin-only lowercasing; the canonical lemma lookup form."""
    return "".join(_lower_latin(ch) for ch in unicodedata.normalize("NFC", s))


def match_key(s: str) -> str:
    """Lemma form with whitespace squashed, for matching token n-grams
    against multi-word lemmas regardless of how the tokens are joined."""
    return "".join(normalize_lemma(s).split())


def normalize_text(s: str) -> str:
    """Loose comparison form for answers and choices: NFC, casefold,
    whitespace collapsed."""
    return " ".join(unicodedata.normalize("NFC", s).casefold().split())
