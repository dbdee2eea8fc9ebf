"""Raw text to term counts: tokenize, drop stopwords, stem, count.

The stages run in that order. Stemming happens after stopword removal, and
any stem that lands on a stopword is dropped as well, so no stopword ever
reaches the term counts.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

_TOKEN_RE = re.compile(r"[^\W\d_]+")
_VOWELS = frozenset("aeiouy")


@dataclass(frozen=True)
class StopwordList:
    words: frozenset
    source: str = "builtin"

    def __contains__(self, token):
        return token.lower() in self.words

    def __len__(self):
        return len(self.words)

    @classmethod
    def from_lines(cls, lines: Iterable[str], source: str) -> "StopwordList":
        words = set()
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            words.add(line.lower())
        return cls(frozenset(words), source)

    @classmethod
    def from_file(cls, path) -> "StopwordList":
        path = Path(path)
        with open(path, encoding="utf-8") as fh:
            return cls.from_lines(fh, str(path))

    @classmethod
    def builtin(cls) -> "StopwordList":
        return _builtin_stopwords()


@lru_cache(maxsize=None)
def _builtin_stopwords():
    text = resources.files("doccluster.data").joinpath("stopwords.txt").read_text("utf-8")
    return StopwordList.from_lines(text.splitlines(), "builtin")


@dataclass
class Document:
    """One ingested text and its processed term statistics."""

    id: str
    raw_text: str
    label: Optional[str] = None
    term_counts: dict = field(default_factory=dict)
    kept_token_total: int = 0

    @classmethod
    def from_text(cls, id, raw_text, label=None, stoplist=None, stemmer=None):
        terms = process_text(raw_text, stoplist, stemmer)
        counts, total = term_frequencies(terms)
        return cls(id=id, raw_text=raw_text, label=label,
                   term_counts=counts, kept_token_total=total)


def tokenize(raw_text: str) -> list:
    """Split text into lowercase alphabetic runs; digits and punctuation separate."""
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(raw_text)]


def remove_stopwords(tokens, stoplist: Optional[StopwordList] = None) -> list:
    if stoplist is None:
        stoplist = StopwordList.builtin()
    words = stoplist.words
    return [t for t in tokens if t not in words]


def load_stem_exceptions(path) -> dict:
    """Read a ``stripped<TAB>restored`` table (``#`` lines ignored)."""
    with open(path, encoding="utf-8") as fh:
        return _parse_exceptions(fh)


def _parse_exceptions(lines):
    table = {}
    for line in lines:
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        stripped, restored = line.split("\t")
        table[stripped.strip()] = restored.strip()
    return table


@lru_cache(maxsize=None)
def _builtin_exceptions():
    text = resources.files("doccluster.data").joinpath("stem_exceptions.tsv").read_text("utf-8")
    return _parse_exceptions(text.splitlines())


class Stemmer:
    """Small rule-table suffix stripper.

    Rules, longest suffix first, at most one applied:

    ``-sses`` -> ``-ss``, ``-ies`` -> ``-y``, ``-ing`` / ``-ed`` stripped (with
    the restore table putting back a final ``e``), ``-s`` stripped when the
    word is longer than three letters. ``-ing``/``-ed`` need a vowel in what
    remains and ``-eed`` words are left alone; ``-s`` skips ``-ss``, ``-us``
    and ``-is``.

    If the rewritten word would itself be rewritten again, the original word
    is returned instead, which keeps ``stem`` idempotent.
    """

    def __init__(self, exceptions: Optional[dict] = None):
        self.exceptions = dict(_builtin_exceptions() if exceptions is None else exceptions)

    @classmethod
    def from_file(cls, path):
        return cls(load_stem_exceptions(path))

    def _once(self, token):
        if token.endswith("sses"):
            return token[:-2]
        if token.endswith("ies") and len(token) > 3:
            return token[:-3] + "y"
        for suffix in ("ing", "ed"):
            if token.endswith(suffix):
                if token.endswith("eed"):
                    return token
                base = token[: -len(suffix)]
                if len(base) < 2 or not _VOWELS.intersection(base):
                    return token
                return self.exceptions.get(base, base)
        if token.endswith("s") and len(token) > 3 and not token.endswith(("ss", "us", "is")):
            return token[:-1]
        return token

    def __call__(self, token: str) -> str:
        out = self._once(token)
        if out != token and self._once(out) != out:
            return token
        return out


_default_stemmer = None


def stem(token: str) -> str:
    global _default_stemmer
    if _default_stemmer is None:
        _default_stemmer = Stemmer()
    return _default_stemmer(token)


def term_frequencies(tokens) -> tuple:
    """Return ``(term -> count, total kept tokens)``."""
    counts = dict(Counter(tokens))
    return counts, len(tokens)


def process_text(raw_text, stoplist=None, stemmer=None) -> list:
    """Full token pipeline: the ordered list of kept, stemmed terms."""
    if stoplist is None:
        stoplist = StopwordList.builtin()
    stem_fn = stem if stemmer is None else stemmer
    kept = remove_stopwords(tokenize(raw_text), stoplist)
    return remove_stopwords([stem_fn(t) for t in kept], stoplist)
