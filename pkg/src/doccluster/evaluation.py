"""Cluster efficiency and the per-cluster observation table.

Efficiency is medoid-referenced purity: the share of a cluster's documents
whose domain label equals the medoid's label, as a percentage.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal

from .errors import UnlabeledDocument
from .kmedoids import InitStrategy, cluster
from .vector_space import WeightingScheme, build_matrix, build_vocabulary


def round_half_up(value, places=2) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(value)).quantize(q, rounding=ROUND_HALF_UP))


def cluster_efficiency(member_labels, medoid_label) -> float:
    """Percentage (full precision) of members labelled like the medoid."""
    member_labels = list(member_labels)
    if not member_labels:
        raise ValueError("efficiency of an empty cluster is undefined")
    if medoid_label is None or any(lab is None for lab in member_labels):
        raise UnlabeledDocument("every cluster member needs a domain label")
    hits = sum(lab == medoid_label for lab in member_labels)
    return 100.0 * hits / len(member_labels)


@dataclass(frozen=True)
class TableRow:
    cluster_no: int
    medoid: str
    doc_count: int
    matching: int
    efficiency_percent: float

    @property
    def efficiency_display(self):
        return f"{round_half_up(self.efficiency_percent):.2f}%"


@dataclass
class ObservationTable:
    rows: list
    corpus_size: int
    scheme: str = ""
    k: int = 0
    extra: dict = field(default_factory=dict)

    def mean_efficiency(self) -> float:
        """Size-weighted mean, i.e. the fraction of all documents matching their medoid."""
        hits = sum(r.matching for r in self.rows)
        return 100.0 * hits / self.corpus_size

    def to_text(self) -> str:
        lines = [f"{'CLUSTER No':<12}{'No of DOCUMENTS':<18}EFFICIENCY"]
        for r in self.rows:
            lines.append(f"{r.cluster_no:<12}{r.doc_count:<18}{r.efficiency_display}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["cluster_no", "doc_count", "efficiency_percent"])
        for r in self.rows:
            w.writerow([r.cluster_no, r.doc_count, f"{round_half_up(r.efficiency_percent):.2f}"])
        return buf.getvalue()

    @staticmethod
    def parse_csv(text):
        """Read back ``(cluster_no, doc_count, efficiency_percent)`` tuples."""
        rows = list(csv.DictReader(io.StringIO(text)))
        return [(int(r["cluster_no"]), int(r["doc_count"]), float(r["efficiency_percent"]))
                for r in rows]


def observation_table(clustering, labels, doc_ids=None, scheme="") -> ObservationTable:
    labels = list(labels)
    if any(lab is None for lab in labels):
        raise UnlabeledDocument("observation table needs every document labelled")
    if doc_ids is None:
        doc_ids = [str(i) for i in range(len(labels))]
    rows = []
    for no, m in enumerate(clustering.medoids):
        member_labels = [labels[d] for d in clustering.members(m)]
        eff = cluster_efficiency(member_labels, labels[m])
        matching = sum(lab == labels[m] for lab in member_labels)
        rows.append(TableRow(no, doc_ids[m], len(member_labels), matching, eff))
    return ObservationTable(rows, len(labels), getattr(scheme, "value", scheme), clustering.k)


@dataclass
class SchemeComparison:
    tf_ratio: ObservationTable
    tf_idf: ObservationTable

    @property
    def delta(self) -> float:
        """TF_RATIO mean efficiency minus TF_IDF mean efficiency (percentage points)."""
        return self.tf_ratio.mean_efficiency() - self.tf_idf.mean_efficiency()

    def to_json(self) -> str:
        payload = {
            "tf_ratio_mean_efficiency": self.tf_ratio.mean_efficiency(),
            "tf_idf_mean_efficiency": self.tf_idf.mean_efficiency(),
            "delta_tf_ratio_minus_tf_idf": self.delta,
        }
        return json.dumps(payload, indent=2) + "\n"


def compare_schemes(documents, k=5, seed=0, strategy=None, max_iterations=None,
                    metric="manhattan", threads=1) -> SchemeComparison:
    """Cluster the same corpus under both weighting schemes with identical settings."""
    labels = [d.label for d in documents]
    if any(lab is None for lab in labels):
        raise UnlabeledDocument("scheme comparison needs a labelled corpus")
    if strategy is None:
        strategy = InitStrategy.random(seed)
    vocab = build_vocabulary(documents)
    tables = {}
    for scheme in WeightingScheme:
        matrix = build_matrix(documents, vocab, scheme)
        result = cluster(matrix, k, strategy, max_iterations, labels, metric, threads)
        tables[scheme] = observation_table(result, labels, matrix.doc_ids, scheme)
    return SchemeComparison(tables[WeightingScheme.TF_RATIO], tables[WeightingScheme.TF_IDF])
