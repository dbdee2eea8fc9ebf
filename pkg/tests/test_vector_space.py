import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from doccluster.errors import EmptyCorpus, InvalidDF, VocabularyMismatch, ZeroLengthDocument
from doccluster.text_pipeline import Document
from doccluster.vector_space import (TermDocumentMatrix, WeightingScheme, build_matrix,
                                     build_vocabulary, idf, tf_weight)

from conftest import make_docs

TF, TFIDF = WeightingScheme.TF_RATIO, WeightingScheme.TF_IDF


def test_vocabulary_union():
    v = build_vocabulary(make_docs({"film": 2}, {"film": 1, "award": 1}))
    assert v.terms == ("award", "film")
    assert v.doc_frequency == {"award": 1, "film": 2}
    assert (v.V, v.D) == (2, 2)


def test_vocabulary_of_stopword_only_doc():
    v = build_vocabulary(make_docs({}))
    assert v.terms == () and v.V == 0 and v.D == 1


def test_vocabulary_disjoint():
    docs = make_docs(*({f"w{i}a": 1, f"w{i}b": 2} for i in range(5)))
    v = build_vocabulary(docs)
    assert v.V == 10
    assert set(v.doc_frequency.values()) == {1}


def test_vocabulary_empty_corpus():
    with pytest.raises(EmptyCorpus):
        build_vocabulary([])


def test_tf_weight():
    assert tf_weight(2, 4) == 0.5
    assert tf_weight(0, 10) == 0.0
    with pytest.raises(ZeroLengthDocument):
        tf_weight(0, 0)


def test_tf_weight_entertainment_excerpt(entertainment_text):
    # hand count: "film" occurs 10 times; 63 tokens survive stopword removal
    doc = Document.from_text("ent.txt", entertainment_text, "Entertainment")
    assert doc.term_counts["film"] == 10
    assert doc.kept_token_total == 63
    assert tf_weight(doc.term_counts["film"], doc.kept_token_total) == pytest.approx(10 / 63)


def test_idf():
    assert idf(7, 7) == 0.0
    assert idf(1, 1) == 0.0
    assert idf(5, 100) == pytest.approx(2.995732273553991, abs=1e-12)
    for bad in [(0, 3), (4, 3)]:
        with pytest.raises(InvalidDF):
            idf(*bad)


def test_build_matrix_single_doc():
    docs = make_docs({"film": 2, "award": 2})
    m = build_matrix(docs, build_vocabulary(docs), TF)
    assert m.weights.tolist() == [[0.5, 0.5]]


def test_build_matrix_ubiquitous_term_zero_under_tfidf():
    docs = make_docs({"film": 1, "a1": 1}, {"film": 3}, {"film": 1, "b2": 2})
    v = build_vocabulary(docs)
    m = build_matrix(docs, v, TFIDF)
    assert np.all(m.weights[:, v.terms.index("film")] == 0.0)


TOY = ({"film": 2, "award": 1, "net": 1}, {"film": 1, "court": 3}, {"net": 2})
# hand-computed; columns award, court, film, net; ln 3 = 1.0986122886681098, ln 1.5 = 0.4054651081081644
TOY_TF = [[0.25, 0, 0.5, 0.25], [0, 0.75, 0.25, 0], [0, 0, 0, 1.0]]
TOY_TFIDF = [[0.27465307216702745, 0, 0.2027325540540822, 0.1013662770270411],
             [0, 0.82395921650108235, 0.1013662770270411, 0],
             [0, 0, 0, 0.4054651081081644]]


def test_build_matrix_toy_grid():
    docs = make_docs(*TOY)
    v = build_vocabulary(docs)
    assert v.terms == ("award", "court", "film", "net")
    np.testing.assert_allclose(build_matrix(docs, v, TF).weights, TOY_TF, atol=1e-15)
    np.testing.assert_allclose(build_matrix(docs, v, TFIDF).weights, TOY_TFIDF, rtol=1e-12)


def test_build_matrix_vocabulary_mismatch():
    docs = make_docs({"film": 1})
    v = build_vocabulary(make_docs({"award": 1}))
    with pytest.raises(VocabularyMismatch):
        build_matrix(docs, v, TF)


def test_matrix_is_read_only():
    docs = make_docs(*TOY)
    m = build_matrix(docs, build_vocabulary(docs), TF)
    with pytest.raises(ValueError):
        m.weights[0, 0] = 1.0


def test_scheme_parse():
    assert WeightingScheme.parse("tf") is TF
    assert WeightingScheme.parse("tf-idf") is TFIDF
    assert WeightingScheme.parse("TFIDF") is TFIDF
    with pytest.raises(ValueError):
        WeightingScheme.parse("bm25")


corpora = st.lists(
    st.dictionaries(st.sampled_from("abcdefgh"), st.integers(1, 9), min_size=1),
    min_size=1, max_size=8)


@settings(max_examples=200)
@given(corpora)
def test_weighting_invariants(count_maps):
    docs = make_docs(*count_maps)
    v = build_vocabulary(docs)
    tf = build_matrix(docs, v, TF).weights
    tfidf = build_matrix(docs, v, TFIDF).weights
    assert np.all(tf >= 0) and np.all(tfidf >= 0)
    np.testing.assert_allclose(tf.sum(axis=1), 1.0, atol=1e-9)
    for j, t in enumerate(v.terms):
        factor = math.log(v.D / v.doc_frequency[t])
        np.testing.assert_allclose(tfidf[:, j], tf[:, j] * factor, atol=1e-9)
        if v.doc_frequency[t] == v.D:
            assert np.all(tfidf[:, j] == 0)
    assert np.array_equal(tf > 0, np.array([[t in d.term_counts for t in v.terms] for d in docs]))


@given(corpora, st.randoms())
def test_permutation_equivariance(count_maps, rnd):
    docs = make_docs(*count_maps)
    perm = list(range(len(docs)))
    rnd.shuffle(perm)
    shuffled = [docs[i] for i in perm]
    for scheme in WeightingScheme:
        a = build_matrix(docs, build_vocabulary(docs), scheme)
        b = build_matrix(shuffled, build_vocabulary(shuffled), scheme)
        assert b.terms == a.terms
        assert b.doc_ids == tuple(a.doc_ids[i] for i in perm)
        assert np.array_equal(b.weights, a.weights[perm])


@given(corpora)
def test_export_round_trip(count_maps):
    docs = make_docs(*count_maps)
    m = build_matrix(docs, build_vocabulary(docs), TFIDF)
    csv_text, json_text = m.to_csv(), m.to_json()
    from_csv = TermDocumentMatrix.from_csv(csv_text, TFIDF)
    from_json = TermDocumentMatrix.from_json(json_text)
    assert from_csv.to_csv() == csv_text
    assert from_json.to_json() == json_text
    assert np.array_equal(from_csv.weights, from_json.weights)
    assert from_json.scheme is TFIDF and from_json.doc_ids == m.doc_ids
    np.testing.assert_allclose(from_csv.weights, m.weights, rtol=5e-9)


def test_csv_layout():
    docs = make_docs(*TOY)
    text = build_matrix(docs, build_vocabulary(docs), TF).to_csv()
    assert text.splitlines()[:2] == ["doc_id,award,court,film,net", "d0,0.25,0,0.5,0.25"]
