"""Seeded synthetic labelled corpora for demos and tests."""

from pathlib import Path

import numpy as np

from .text_pipeline import Document

_CONSONANTS = "bcdfghjklmnprtvz"
_VOWELS = "aou"


def _word(rng, length=3):
    # consonant-vowel syllables, ending in a consonant so no stemming rule fires
    syl = ["".join((rng.choice(list(_CONSONANTS)), rng.choice(list(_VOWELS))))
           for _ in range(length)]
    return "".join(syl) + rng.choice(list("kmt"))


def domain_vocabularies(n_domains, words_per_domain, shared_words, seed):
    """Disjoint per-domain word lists plus one shared list."""
    rng = np.random.default_rng(seed)
    seen = set()
    out = []
    for _ in range(n_domains + 1):
        words = []
        size = words_per_domain if len(out) < n_domains else shared_words
        while len(words) < size:
            w = _word(rng)
            if w not in seen:
                seen.add(w)
                words.append(w)
        out.append(words)
    return out[:n_domains], out[n_domains]


def make_corpus(n_domains=5, docs_per_domain=20, words_per_domain=60, shared_words=6,
                sentences_per_doc=6, words_per_sentence=8, shared_rate=0.1, seed=0):
    """Labelled documents whose domain vocabularies are disjoint.

    Each word is drawn from the shared pool with probability ``shared_rate``,
    otherwise from the document's own domain list. With the defaults the
    vocabulary overlap between any two domains is at most the shared pool
    (6 of 66 words, about 9%).
    """
    rng = np.random.default_rng(seed)
    vocabs, shared = domain_vocabularies(n_domains, words_per_domain, shared_words, seed + 1)
    docs = []
    for d in range(n_domains):
        label = f"domain{d}"
        for i in range(docs_per_domain):
            sentences = []
            for _ in range(sentences_per_doc):
                words = [str(rng.choice(shared)) if rng.random() < shared_rate
                         else str(rng.choice(vocabs[d])) for _ in range(words_per_sentence)]
                words[0] = words[0].capitalize()
                sentences.append(" ".join(words) + ".")
            text = " ".join(sentences)
            docs.append(Document.from_text(f"{label}/doc{i:02d}.txt", text, label))
    return docs


def write_corpus(documents, root):
    """Write documents as ``root/<id>`` text files."""
    root = Path(root)
    for doc in documents:
        path = root / doc.id
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(doc.raw_text, encoding="utf-8")
    return root
