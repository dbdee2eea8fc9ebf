"""
From raw text to term weights
=============================

Tokenize, drop stopwords, stem, count, then weight each term.
"""

from doccluster import Document, build_matrix, build_vocabulary, stem, tokenize

text = ("Salaam Bombay is a 1988 Hindi film directed by Mira Nair. "
        "The film chronicles the day-to-day life of children living on the streets of Mumbai.")

# tokens are alphabetic runs, lowercased; "1988" disappears
print(tokenize(text)[:8])

# the stemmer is a small rule table, not Porter
for word in ["defined", "players", "parties", "living", "film"]:
    print(f"{word:>8} -> {stem(word)}")

doc = Document.from_text("ent/salaam.txt", text, label="Entertainment")
print(doc.kept_token_total, "kept tokens;", sorted(doc.term_counts.items(), key=lambda kv: -kv[1])[:3])

# a second document so that idf has something to do
other = Document.from_text("sport/badminton.txt",
                           "Badminton is a racquet sport. Players score points with a racquet.",
                           label="Sport")
docs = [doc, other]
vocab = build_vocabulary(docs)
tf = build_matrix(docs, vocab, "TF_RATIO")
tfidf = build_matrix(docs, vocab, "TF_IDF")
print("row sums under TF_RATIO:", tf.weights.sum(axis=1))
print(tf.to_csv().splitlines()[0][:70], "...")
print("film weight  tf:", tf.row(doc.id)[vocab.terms.index("film")],
      " tf-idf:", tfidf.row(doc.id)[vocab.terms.index("film")])
