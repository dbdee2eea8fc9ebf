"""Vocabulary and the documents x terms weight matrix.

Two weighting schemes are supported. ``TF_RATIO`` stores a term's count
divided by the document's kept-token total. ``TF_IDF`` multiplies that
ratio by ``ln(D / df)``. Rows are documents and columns are terms.
"""

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyCorpus, InvalidDF, VocabularyMismatch, ZeroLengthDocument

SIG_DIGITS = 9


class WeightingScheme(str, enum.Enum):
    TF_RATIO = "TF_RATIO"
    TF_IDF = "TF_IDF"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper().replace("-", "_")
        aliases = {"TF": "TF_RATIO", "TFIDF": "TF_IDF"}
        return cls(aliases.get(key, key))


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple
    doc_frequency: dict
    n_documents: int

    @property
    def V(self):
        return len(self.terms)

    @property
    def D(self):
        return self.n_documents

    def index(self):
        return {t: i for i, t in enumerate(self.terms)}


@dataclass(frozen=True)
class TermDocumentMatrix:
    doc_ids: tuple
    terms: tuple
    weights: np.ndarray
    scheme: WeightingScheme

    def __post_init__(self):
        self.weights.setflags(write=False)

    @property
    def shape(self):
        return self.weights.shape

    def row(self, doc_id):
        return self.weights[self.doc_ids.index(doc_id)]

    def scaled(self, c):
        """Copy with every weight multiplied by ``c``."""
        return TermDocumentMatrix(self.doc_ids, self.terms, self.weights * c, self.scheme)

    # -- export -------------------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["doc_id", *self.terms])
        for doc_id, row in zip(self.doc_ids, self.weights):
            writer.writerow([doc_id, *(_fmt(w) for w in row)])
        return buf.getvalue()

    def to_json(self) -> str:
        payload = {
            "scheme": self.scheme.value,
            "doc_ids": list(self.doc_ids),
            "terms": list(self.terms),
            "weights": [[float(_fmt(w)) for w in row] for row in self.weights],
        }
        return json.dumps(payload, indent=1) + "\n"

    @classmethod
    def from_csv(cls, text, scheme=WeightingScheme.TF_RATIO):
        rows = list(csv.reader(io.StringIO(text)))
        terms = tuple(rows[0][1:])
        doc_ids = tuple(r[0] for r in rows[1:])
        weights = np.array([[float(x) for x in r[1:]] for r in rows[1:]], dtype=float)
        return cls(doc_ids, terms, weights.reshape(len(doc_ids), len(terms)),
                   WeightingScheme.parse(scheme))

    @classmethod
    def from_json(cls, text):
        payload = json.loads(text)
        doc_ids = tuple(payload["doc_ids"])
        terms = tuple(payload["terms"])
        weights = np.array(payload["weights"], dtype=float).reshape(len(doc_ids), len(terms))
        return cls(doc_ids, terms, weights, WeightingScheme.parse(payload["scheme"]))

    def write(self, directory, stem="matrix"):
        directory = Path(directory)
        (directory / f"{stem}.csv").write_text(self.to_csv(), encoding="utf-8")
        (directory / f"{stem}.json").write_text(self.to_json(), encoding="utf-8")


def _fmt(w):
    s = f"{float(w):.{SIG_DIGITS}g}"
    return "0" if s in ("0", "-0") else s


def build_vocabulary(documents) -> Vocabulary:
    if not documents:
        raise EmptyCorpus("cannot build a vocabulary from zero documents")
    df = {}
    for doc in documents:
        for term, count in doc.term_counts.items():
            if count > 0:
                df[term] = df.get(term, 0) + 1
    terms = tuple(sorted(df))
    return Vocabulary(terms, {t: df[t] for t in terms}, len(documents))


def tf_weight(count, kept_token_total) -> float:
    if kept_token_total <= 0:
        raise ZeroLengthDocument("term weight requested for a document with no kept tokens")
    return count / kept_token_total


def idf(doc_frequency, n_documents) -> float:
    if not 1 <= doc_frequency <= n_documents:
        raise InvalidDF(f"document frequency {doc_frequency} outside [1, {n_documents}]")
    return math.log(n_documents / doc_frequency)


def build_matrix(documents, vocab: Vocabulary, scheme=WeightingScheme.TF_RATIO) -> TermDocumentMatrix:
    scheme = WeightingScheme.parse(scheme)
    col = vocab.index()
    weights = np.zeros((len(documents), vocab.V), dtype=float)
    for i, doc in enumerate(documents):
        for term, count in doc.term_counts.items():
            j = col.get(term)
            if j is None:
                raise VocabularyMismatch(f"term {term!r} of {doc.id} is not in the vocabulary")
            weights[i, j] = tf_weight(count, doc.kept_token_total)
    if scheme is WeightingScheme.TF_IDF:
        factors = np.array([idf(vocab.doc_frequency[t], vocab.D) for t in vocab.terms])
        weights = weights * factors
    return TermDocumentMatrix(tuple(d.id for d in documents), vocab.terms, weights, scheme)
