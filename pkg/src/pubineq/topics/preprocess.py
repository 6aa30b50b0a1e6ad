"""Abstract cleaning: tokenization, stopword removal, sentence splitting.

The stopword list ships as an editable data file
(``pubineq/data/stopwords.txt``). Stemming is off by default: published
keyword lists in this domain keep inflected forms ("learning", "based"), so
only an optional plural-folding pass is offered.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

_NON_LETTER_RE = re.compile(r"[^a-z]+")
_SENTENCE_BOUNDARY_RE = re.compile(r"(?<=[.!?])\s+(?=[A-Z])")

_DEFAULT_STOPWORDS: frozenset[str] | None = None


@dataclass
class TokenizedDoc:
    article_id: str
    tokens: list[str]
    country: str = ""


def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Stopword set from ``path``, or the packaged default list."""
    if path is None:
        global _DEFAULT_STOPWORDS
        if _DEFAULT_STOPWORDS is None:
            text = resources.files("pubineq.data").joinpath("stopwords.txt").read_text("utf-8")
            _DEFAULT_STOPWORDS = _parse_stopwords(text)
        return _DEFAULT_STOPWORDS
    with open(path, encoding="utf-8") as fh:
        return _parse_stopwords(fh.read())


def _parse_stopwords(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def stem_token(token: str) -> str:
    """Light plural folding: -ies -> y, -sses -> ss, trailing -s dropped."""
    if token.endswith("ies") and len(token) > 4:
        return token[:-3] + "y"
    if token.endswith("sses"):
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) > 3:
        return token[:-1]
    return token


def preprocess(
    abstract: str,
    article_id: str = "",
    country: str = "",
    stopwords: frozenset[str] | None = None,
    stem: bool = False,
    min_length: int = 2,
) -> TokenizedDoc:
    """Lowercase, strip punctuation and digits, split, drop stopwords.

    Tokens shorter than ``min_length`` are discarded. An empty result is
    allowed.
    """
    if stopwords is None:
        stopwords = load_stopwords()
    cleaned = _NON_LETTER_RE.sub(" ", abstract.lower())
    tokens = []
    for token in cleaned.split():
        if len(token) < min_length or token in stopwords:
            continue
        if stem:
            token = stem_token(token)
            if len(token) < min_length or token in stopwords:
                continue
        tokens.append(token)
    return TokenizedDoc(article_id=article_id, tokens=tokens, country=country)


def sentence_split(text: str) -> list[str]:
    """Split at '.', '!' or '?' followed by whitespace and an uppercase letter.

    Single-sentence text (or text with no terminator) comes back whole; an
    abbreviation like "A." does split, which is accepted behavior for this
    corpus.
    """
    stripped = text.strip()
    if not stripped:
        return []
    return [part for part in _SENTENCE_BOUNDARY_RE.split(stripped) if part]
