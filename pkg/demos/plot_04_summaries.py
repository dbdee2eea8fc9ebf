"""
Extractive summaries per cluster
================================

Sentences are scored by the mean weight of their terms in the document's
matrix row; each cluster summary stacks the top sentences of its members.
"""

from doccluster import (Document, InitStrategy, build_matrix, build_vocabulary, cluster,
                        summarize_cluster, summarize_document)

texts = {
    "sport/badminton.txt": "Badminton is a racquet sport. Players score points by striking a "
                           "shuttlecock with their racquet. The court is divided by a net.",
    "sport/tennis.txt": "Tennis is a racquet sport played on a court. Players hit a ball over "
                        "the net. A match has sets.",
    "lit/middle.txt": "Middle English evolved in the 12th century. Middle English Bible "
                      "translations helped establish English as a literary language.",
    "lit/chaucer.txt": "Chaucer wrote in Middle English. His tales are read as English "
                       "literature. The printing press regularized the language.",
}
docs = [Document.from_text(k, v, k.split("/")[0]) for k, v in texts.items()]
matrix = build_matrix(docs, build_vocabulary(docs), "TF_RATIO")

print(summarize_document(docs[0], matrix, n=1).to_text())

result = cluster(matrix, 2, InitStrategy.stratified(), labels=[d.label for d in docs])
for m in result.medoids:
    members = [docs[i] for i in result.members(m)]
    summary = summarize_cluster(members, matrix, n_per_doc=1)
    print(f"# medoid {matrix.doc_ids[m]}")
    print(summary.to_text())

# raw sums favour long sentences
print(summarize_document(docs[2], matrix, n=1, mode="sum").to_text())
