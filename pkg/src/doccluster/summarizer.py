"""Extractive summaries built from matrix weights.

A sentence scores the mean matrix weight of its kept terms (or their sum,
with ``mode="sum"``). A document summary keeps the top-n sentences,
earlier sentences winning ties, and returns them in original order.
"""

import enum
import json
import re
from dataclasses import dataclass, field, replace

from .text_pipeline import process_text

_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")


class Scope(str, enum.Enum):
    DOCUMENT = "DOCUMENT"
    CLUSTER = "CLUSTER"


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    index: int
    text: str
    score: float = 0.0


@dataclass
class Summary:
    scope: Scope
    sentences: list = field(default_factory=list)
    n_requested: int = 1

    def to_text(self) -> str:
        out = []
        current = None
        for s in self.sentences:
            if s.doc_id != current:
                current = s.doc_id
                out.append(f"== {current} ==")
            out.append(s.text)
        return "\n".join(out) + "\n" if out else ""

    def to_dict(self) -> dict:
        return {
            "scope": self.scope.value,
            "items": [{"doc_id": s.doc_id, "sentence_index": s.index,
                       "score": s.score, "text": s.text} for s in self.sentences],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, payload, n_requested=None):
        sentences = [Sentence(it["doc_id"], it["sentence_index"], it["text"], it["score"])
                     for it in payload["items"]]
        n = len(sentences) if n_requested is None else n_requested
        return cls(Scope(payload["scope"]), sentences, n)


def split_sentences(raw_text, doc_id="") -> list:
    """Split at ``.``, ``!`` or ``?`` followed by whitespace or the end of the text.

    Abbreviations such as "Dr." also end a sentence; that is a known limitation.
    """
    parts = (p.strip() for p in _SENTENCE_END.split(raw_text))
    return [Sentence(doc_id, i, p) for i, p in enumerate(p for p in parts if p)]


def score_sentence(sentence, doc_row, vocab, stoplist=None, stemmer=None, mode="mean") -> float:
    """``vocab`` is the matrix's term sequence (or a Vocabulary) aligned with ``doc_row``."""
    terms = getattr(vocab, "terms", vocab)
    col = {t: i for i, t in enumerate(terms)}
    kept = process_text(sentence.text, stoplist, stemmer)
    if not kept:
        return 0.0
    total = 0.0
    for t in kept:
        j = col.get(t)
        if j is not None:
            total += float(doc_row[j])
    return total if mode == "sum" else total / len(kept)


def _scored_sentences(doc, matrix, stoplist, stemmer, mode):
    row = matrix.row(doc.id)
    col_terms = matrix.terms
    return [replace(s, score=score_sentence(s, row, col_terms, stoplist, stemmer, mode))
            for s in split_sentences(doc.raw_text, doc.id)]


def summarize_document(doc, matrix, n=3, stoplist=None, stemmer=None, mode="mean") -> Summary:
    if n < 1:
        raise ValueError("n must be >= 1")
    scored = _scored_sentences(doc, matrix, stoplist, stemmer, mode)
    top = sorted(scored, key=lambda s: (-s.score, s.index))[:n]
    return Summary(Scope.DOCUMENT, sorted(top, key=lambda s: s.index), n)


def summarize_cluster(members, matrix, n_per_doc=3, stoplist=None, stemmer=None,
                      mode="mean") -> Summary:
    """Per-document top sentences, concatenated by document id then sentence index."""
    if not members:
        raise ValueError("cannot summarize an empty cluster")
    sentences = []
    for doc in sorted(members, key=lambda d: d.id):
        sentences.extend(summarize_document(doc, matrix, n_per_doc, stoplist, stemmer, mode).sentences)
    return Summary(Scope.CLUSTER, sentences, n_per_doc * len(members))
