"""K-Medoids (PAM-style swap search) over document rows under Manhattan distance.

Procedure:

1. choose k initial medoids (seeded random or one per label);
2. compute distances from every document to every medoid;
3. assign each document to its nearest medoid (ties go to the lowest row index);
4. total cost = sum of assigned distances;
5-6. scan (medoid, non-medoid) pairs in ascending row order, swapping in the
   first candidate that strictly lowers the total cost, then restart the scan;
7. stop once a full scan finds no improving swap.

Medoids are always kept sorted by row index.

Floating-point sums are not exact, so "equal" is decided with a relative
tolerance (``REL_TOL``): a distance within ``REL_TOL`` of a row's smallest
medoid distance counts as a tie, and a swap must lower the cost by more than
``REL_TOL`` of the current cost. Both thresholds scale with the data, so
multiplying every weight by a positive constant leaves every decision alone.
"""

import enum
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import (AlreadyMedoid, BadK, DimensionMismatch, InvariantViolation,
                     MissingLabels, NotAMedoid)

REL_TOL = 1e-9


class InitKind(str, enum.Enum):
    RANDOM_SEEDED = "RANDOM_SEEDED"
    LABEL_STRATIFIED = "LABEL_STRATIFIED"


@dataclass(frozen=True)
class InitStrategy:
    kind: InitKind = InitKind.RANDOM_SEEDED
    rng_seed: int = 0

    @classmethod
    def random(cls, seed=0):
        return cls(InitKind.RANDOM_SEEDED, seed)

    @classmethod
    def stratified(cls, seed=0):
        return cls(InitKind.LABEL_STRATIFIED, seed)


@dataclass
class Clustering:
    medoids: list
    assignment: list
    total_cost: float
    iterations: int = 0
    converged: bool = True
    initial_cost: Optional[float] = None
    cost_history: list = field(default_factory=list)

    @property
    def k(self):
        return len(self.medoids)

    def members(self, medoid):
        return [d for d, m in enumerate(self.assignment) if m == medoid]

    def sizes(self):
        return [len(self.members(m)) for m in self.medoids]


def manhattan_distance(x, y) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise DimensionMismatch(f"vectors of shape {x.shape} and {y.shape}")
    return float(np.abs(x - y).sum())


def euclidean_distance(x, y) -> float:
    """Non-default alternative metric; Manhattan is the standard choice."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise DimensionMismatch(f"vectors of shape {x.shape} and {y.shape}")
    return float(np.sqrt(((x - y) ** 2).sum()))


_ROW_DISTANCE = {
    "manhattan": lambda X, x: np.abs(X - x).sum(axis=1),
    "euclidean": lambda X, x: np.sqrt(((X - x) ** 2).sum(axis=1)),
}


def _weights(matrix):
    return np.asarray(getattr(matrix, "weights", matrix), dtype=float)


def pairwise_distances(matrix, metric="manhattan", threads=1) -> np.ndarray:
    """Full D x D distance matrix.

    Each row is computed independently, so the result does not depend on
    ``threads``.
    """
    X = _weights(matrix)
    try:
        row_dist = _ROW_DISTANCE[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}") from None
    out = np.empty((X.shape[0], X.shape[0]), dtype=float)

    def fill(i):
        out[i] = row_dist(X, X[i])

    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill, range(X.shape[0])))
    else:
        for i in range(X.shape[0]):
            fill(i)
    return out


def initialize_medoids(matrix, k, strategy: InitStrategy = InitStrategy(), labels=None) -> list:
    n = _weights(matrix).shape[0]
    if not 1 <= k <= n:
        raise BadK(f"k={k} outside [1, {n}]")
    if strategy.kind is InitKind.RANDOM_SEEDED:
        rng = np.random.default_rng(strategy.rng_seed)
        return sorted(int(i) for i in rng.choice(n, size=k, replace=False))

    if labels is None or len(labels) != n or any(lab is None for lab in labels):
        raise MissingLabels("stratified initialization needs a label for every document")
    first = {}
    for i, lab in enumerate(labels):
        first.setdefault(lab, i)
    if len(first) != k:
        raise BadK(f"stratified initialization needs k = {len(first)} (distinct labels), got {k}")
    return sorted(first.values())


def _assign_from(dist, medoids):
    sub = dist[:, medoids]
    slack = REL_TOL * sub.max(axis=1, keepdims=True)
    # first (lowest-index) medoid within tolerance of the row minimum
    nearest = np.argmax(sub <= sub.min(axis=1, keepdims=True) + slack, axis=1)
    # duplicate rows: a medoid still owns itself
    nearest[medoids] = np.arange(len(medoids))
    cost = float(sub[np.arange(dist.shape[0]), nearest].sum())
    return [int(medoids[j]) for j in nearest], cost


def _check_medoids(medoids, n):
    if len(set(medoids)) != len(medoids) or any(not 0 <= m < n for m in medoids):
        raise BadK(f"medoids {medoids} are not distinct row indices in [0, {n})")


def assign(matrix, medoids, metric="manhattan"):
    """Nearest-medoid assignment; returns ``(assignment, total_cost)``."""
    dist = pairwise_distances(matrix, metric)
    medoids = sorted(int(m) for m in medoids)
    _check_medoids(medoids, dist.shape[0])
    return _assign_from(dist, medoids)


def improves(new_cost, cost):
    """Strict improvement, beyond the relative tolerance."""
    return new_cost < cost - REL_TOL * cost


def _swapped(medoids, out, into):
    return sorted(into if m == out else m for m in medoids)


def try_swap(matrix, clustering: Clustering, medoid_out, candidate_in, metric="manhattan"):
    """Cost of replacing one medoid; returns ``(new_total_cost, accept)``.

    A swap is accepted only when it strictly lowers the total cost (by more
    than ``REL_TOL`` relative).
    """
    if medoid_out not in clustering.medoids:
        raise NotAMedoid(f"row {medoid_out} is not a medoid")
    if candidate_in in clustering.medoids:
        raise AlreadyMedoid(f"row {candidate_in} is already a medoid")
    dist = pairwise_distances(matrix, metric)
    _, cost = _assign_from(dist, _swapped(clustering.medoids, medoid_out, candidate_in))
    return cost, improves(cost, clustering.total_cost)


def cluster(matrix, k=5, strategy: InitStrategy = InitStrategy(), max_iterations=None,
            labels=None, metric="manhattan", threads=1) -> Clustering:
    """Run the swap search to a local optimum (or ``max_iterations`` accepted swaps)."""
    dist = pairwise_distances(matrix, metric, threads)
    n = dist.shape[0]
    medoids = initialize_medoids(matrix, k, strategy, labels)
    if max_iterations is None:
        max_iterations = 10 * n
    if max_iterations < 1:
        raise BadK(f"max_iterations must be >= 1, got {max_iterations}")

    assignment, cost = _assign_from(dist, medoids)
    history = [cost]
    iterations = 0
    converged = False
    while True:
        improved = False
        for out in list(medoids):
            for cand in range(n):
                if cand in medoids:
                    continue
                trial = _swapped(medoids, out, cand)
                new_assignment, new_cost = _assign_from(dist, trial)
                if improves(new_cost, cost):
                    medoids, assignment, cost = trial, new_assignment, new_cost
                    history.append(cost)
                    iterations += 1
                    improved = True
                    break
            if improved:
                break
        if not improved:
            converged = True
            break
        if iterations >= max_iterations:
            break

    result = Clustering(medoids, assignment, cost, iterations, converged, history[0], history)
    check_clustering(dist, result)
    return result


def check_clustering(dist, clustering: Clustering):
    """Raise InvariantViolation unless the clustering is internally consistent."""
    n = dist.shape[0]
    meds = clustering.medoids
    if len(clustering.assignment) != n or sum(clustering.sizes()) != n:
        raise InvariantViolation("assignment does not partition the documents")
    for m in meds:
        if clustering.assignment[m] != m:
            raise InvariantViolation(f"medoid {m} is not assigned to itself")
    expected, cost = _assign_from(dist, list(meds))
    if expected != list(clustering.assignment):
        raise InvariantViolation("assignment is not the nearest-medoid assignment")
    if cost != clustering.total_cost:
        raise InvariantViolation("total_cost does not match the assigned distances")


def clustering_report(clustering: Clustering, matrix, seed, metric="manhattan") -> dict:
    """JSON-ready report; ``intra_cost`` is the summed member-to-medoid distance."""
    X = _weights(matrix)
    doc_ids = list(getattr(matrix, "doc_ids", range(X.shape[0])))
    row_dist = _ROW_DISTANCE[metric]
    clusters = []
    for m in clustering.medoids:
        members = clustering.members(m)
        clusters.append({
            "medoid": doc_ids[m],
            "members": [doc_ids[d] for d in members],
            "intra_cost": float(row_dist(X[members], X[m]).sum()),
        })
    scheme = getattr(matrix, "scheme", None)
    return {
        "scheme": getattr(scheme, "value", scheme),
        "k": clustering.k,
        "seed": seed,
        "medoids": [doc_ids[m] for m in clustering.medoids],
        "clusters": clusters,
        "total_cost": clustering.total_cost,
        "iterations": clustering.iterations,
        "converged": clustering.converged,
    }


def clustering_from_report(report: dict, doc_ids) -> Clustering:
    """Rebuild a Clustering (row indices) from a report and the matrix row order."""
    row = {d: i for i, d in enumerate(doc_ids)}
    medoids = sorted(row[d] for d in report["medoids"])
    assignment = [None] * len(doc_ids)
    for c in report["clusters"]:
        for member in c["members"]:
            assignment[row[member]] = row[c["medoid"]]
    return Clustering(medoids, assignment, report["total_cost"],
                      report["iterations"], report["converged"])


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"
