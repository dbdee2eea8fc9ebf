import pytest

from doccluster.summarizer import (Scope, Sentence, Summary, score_sentence, split_sentences,
                                   summarize_cluster, summarize_document)
from doccluster.text_pipeline import Document
from doccluster.vector_space import WeightingScheme, build_matrix, build_vocabulary

# Ten fixture documents. Expected top-2 sentence indices were hand-computed from
# TF-ratio mean scores, e.g. doc 0: alpha 3/7, beta 2/7 -> sentence scores 8/21, 1/7, 5/14.
FIXTURE = [
    ("alpha alpha beta. gamma delta. alpha beta.", [0, 2]),
    ("river stone. river river lamp. stone lamp moon. moon.", [0, 1]),
    ("cat dog. dog dog dog. cat bird. bird bird bird bird.", [1, 3]),
    ("one. two two. three three three.", [1, 2]),
    ("apple pear. pear plum. plum plum apple. kiwi.", [1, 2]),
    ("red blue green. red red. blue. green green green.", [0, 3]),   # tie 1/3 vs 1/3 -> earlier
    ("sun moon star. sun sun. star. comet.", [0, 1]),                 # tie 2/7 vs 2/7 -> earlier
    ("north south. east west. north north east. south.", [0, 2]),
    ("lion tiger bear. tiger tiger. bear bear bear. lion.", [0, 2]),
    ("table chair. chair chair chair lamp. table lamp. desk.", [0, 1]),
]


@pytest.fixture
def fixture_docs():
    docs = [Document.from_text(f"doc{i}.txt", text, "x") for i, (text, _) in enumerate(FIXTURE)]
    matrix = build_matrix(docs, build_vocabulary(docs), WeightingScheme.TF_RATIO)
    return docs, matrix


def test_split_examples(sport_text):
    assert [s.text for s in split_sentences("A b. C d.")] == ["A b.", "C d."]
    assert split_sentences("") == []
    assert len(split_sentences(sport_text)) == 2
    assert [s.text for s in split_sentences("Really?  Yes! 3.5 is fine.\nEnd")] == [
        "Really?", "Yes!", "3.5 is fine.", "End"]
    assert [s.index for s in split_sentences("a. b. c.")] == [0, 1, 2]


def test_score_examples(fixture_docs):
    docs, matrix = fixture_docs
    row = matrix.row("doc0.txt")
    assert score_sentence(Sentence("doc0.txt", 0, "The a an."), row, matrix.terms) == 0
    assert score_sentence(Sentence("doc0.txt", 0, "Alpha."), row, matrix.terms) == pytest.approx(3 / 7)
    s0 = Sentence("doc0.txt", 0, "alpha alpha beta.")
    assert score_sentence(s0, row, matrix.terms) == pytest.approx(8 / 21)
    assert score_sentence(s0, row, matrix.terms, mode="sum") == pytest.approx(8 / 7)


@pytest.mark.parametrize("i", range(len(FIXTURE)))
def test_summarize_document_fixture(fixture_docs, i):
    docs, matrix = fixture_docs
    summary = summarize_document(docs[i], matrix, n=2)
    assert summary.scope is Scope.DOCUMENT
    assert [s.index for s in summary.sentences] == FIXTURE[i][1]


def test_top_n_nesting(fixture_docs):
    docs, matrix = fixture_docs
    for doc in docs:
        total = len(split_sentences(doc.raw_text))
        previous = set()
        for n in range(1, total + 1):
            chosen = {s.index for s in summarize_document(doc, matrix, n).sentences}
            assert previous <= chosen and len(chosen) == n
            previous = chosen
        whole = summarize_document(doc, matrix, total)
        assert [s.text for s in whole.sentences] == [s.text for s in split_sentences(doc.raw_text)]


def test_short_document_returns_all(fixture_docs):
    _, matrix = fixture_docs
    doc = Document.from_text("one.txt", "Only alpha here.")
    m = build_matrix([doc], build_vocabulary([doc]), WeightingScheme.TF_RATIO)
    assert [s.text for s in summarize_document(doc, m, 3).sentences] == ["Only alpha here."]


def test_dominant_term_sentence_wins():
    text = "Plain words here. Zebra zebra zebra zebra. Other plain words."
    doc = Document.from_text("z.txt", text)
    m = build_matrix([doc], build_vocabulary([doc]), WeightingScheme.TF_RATIO)
    scores = [score_sentence(s, m.row("z.txt"), m.terms) for s in split_sentences(text)]
    # "here"/"other" are stopwords: 8 kept terms, zebra 4/8, plain 2/8, word 2/8
    assert scores == pytest.approx([1 / 4, 1 / 2, 1 / 4])
    assert [s.index for s in summarize_document(doc, m, 1).sentences] == [1]


def test_order_invariance_of_scores(fixture_docs):
    docs, matrix = fixture_docs
    row = matrix.row("doc2.txt")
    sents = split_sentences(docs[2].raw_text)
    forward = {s.text: score_sentence(s, row, matrix.terms) for s in sents}
    backward = {s.text: score_sentence(s, row, matrix.terms) for s in reversed(sents)}
    assert forward == backward


def test_summarize_cluster(fixture_docs):
    docs, matrix = fixture_docs
    single = summarize_cluster([docs[4]], matrix, 2)
    assert single.sentences == summarize_document(docs[4], matrix, 2).sentences
    members = [docs[7], docs[1], docs[3]]
    cs = summarize_cluster(members, matrix, 1)
    assert cs.scope is Scope.CLUSTER and len(cs.sentences) == 3
    expected = []
    for d in sorted(members, key=lambda d: d.id):
        expected += summarize_document(d, matrix, 1).sentences
    assert cs.sentences == expected
    assert [s.doc_id for s in cs.sentences] == ["doc1.txt", "doc3.txt", "doc7.txt"]


def test_summary_outputs_round_trip(fixture_docs):
    docs, matrix = fixture_docs
    cs = summarize_cluster(docs[:2], matrix, 2)
    text = cs.to_text()
    assert text.splitlines()[0] == "== doc0.txt =="
    assert text.count("==") == 4
    back = Summary.from_dict(__import__("json").loads(cs.to_json()))
    assert back.sentences == cs.sentences and back.scope is Scope.CLUSTER
