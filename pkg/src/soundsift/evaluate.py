"""Clustering validity metrics and the batch evaluation harness.

Internal validation scores a clustering without ground truth: the
Calinski-Harabasz index of the cluster labels against an independent
feature space (here, LSA-reduced tag vectors), averaged over many query
result sets. External validation compares a clustering to ground-truth
classes with adjusted mutual information.

Information-theoretic quantities use natural logs. Sums are evaluated
with math.fsum so results do not depend on term order: AMI comes out
exactly symmetric, exactly relabel-invariant, and exactly 1.0 for a
labeling compared against itself.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Hashable, Optional, Sequence

import numpy as np

from . import cluster as cluster_mod
from .corpus import Corpus, LabeledDataset
from .errors import (
    DegenerateClustering,
    LengthMismatch,
    SoundsiftError,
    ZeroWithinVariance,
)
from .features import (
    FeatureScheme,
    ProjectionKind,
    ProjectionModel,
    apply_projection_matrix,
    build_tag_vocabulary,
    fit_projection,
    tag_matrix,
)
from .pipeline import ClusterJob, ClusterJobResult, run_clustering


def calinski_harabasz(features: np.ndarray, labels: Sequence[Hashable]) -> float:
    """Ratio of between- to within-cluster dispersion, scaled by (n-k)/(k-1).

    CH = [B/W] * [(n-k)/(k-1)] with W = sum of squared distances to cluster
    means and B = size-weighted squared distances of cluster means to the
    global mean.
    """
    features = np.asarray(features, dtype=float)
    if features.ndim != 2:
        raise ValueError("features must be a 2-D matrix")
    n = features.shape[0]
    if len(labels) != n:
        raise LengthMismatch(f"{len(labels)} labels for {n} feature rows")
    groups: dict[Hashable, list[int]] = {}
    for i, label in enumerate(labels):
        groups.setdefault(label, []).append(i)
    k = len(groups)
    if k < 2 or k > n - 1:
        raise DegenerateClustering(f"need 2 <= k <= n-1 clusters, got k={k}, n={n}")

    global_mean = features.mean(axis=0)
    within = 0.0
    between = 0.0
    for rows in groups.values():
        block = features[rows]
        mu = block.mean(axis=0)
        within += float(np.sum((block - mu) ** 2))
        between += len(rows) * float(np.sum((mu - global_mean) ** 2))
    if within == 0.0:
        raise ZeroWithinVariance("within-cluster variance is zero")
    return (between / within) * ((n - k) / (k - 1))


@dataclass(frozen=True)
class ContingencyTable:
    """Joint co-assignment counts of two labelings of the same n points."""

    counts: tuple[tuple[int, ...], ...]
    row_marginals: tuple[int, ...]
    col_marginals: tuple[int, ...]
    total: int


def contingency(u: Sequence[Hashable], v: Sequence[Hashable]) -> ContingencyTable:
    """Co-assignment count table; rows follow u's classes, columns v's."""
    if len(u) != len(v):
        raise LengthMismatch(f"labelings have lengths {len(u)} and {len(v)}")
    u_ids: dict[Hashable, int] = {}
    v_ids: dict[Hashable, int] = {}
    pairs: Counter[tuple[int, int]] = Counter()
    for a, b in zip(u, v):
        i = u_ids.setdefault(a, len(u_ids))
        j = v_ids.setdefault(b, len(v_ids))
        pairs[(i, j)] += 1
    rows = len(u_ids)
    cols = len(v_ids)
    counts = tuple(
        tuple(pairs.get((i, j), 0) for j in range(cols)) for i in range(rows)
    )
    return ContingencyTable(
        counts=counts,
        row_marginals=tuple(sum(row) for row in counts),
        col_marginals=tuple(sum(counts[i][j] for i in range(rows)) for j in range(cols)),
        total=len(u),
    )


def entropy(labels: Sequence[Hashable]) -> float:
    """Shannon entropy of the label distribution, in nats."""
    if len(labels) == 0:
        raise LengthMismatch("entropy of an empty labeling is undefined")
    n = len(labels)
    counts = Counter(labels)
    return math.fsum(-(c / n) * math.log(c / n) for c in counts.values())


def mutual_information(table: ContingencyTable) -> float:
    """MI of the two labelings behind the table, in nats.

    Each cell contributes p_ij * (log p_ij - (log p_i + log p_j)); the term
    shape and the order-independent fsum make MI(u, u) bit-equal to H(u).
    """
    n = table.total
    terms = []
    for i, row in enumerate(table.counts):
        log_pa = math.log(table.row_marginals[i] / n)
        for j, nij in enumerate(row):
            if nij == 0:
                continue
            log_pb = math.log(table.col_marginals[j] / n)
            pn = nij / n
            terms.append(pn * (math.log(pn) - (log_pa + log_pb)))
    return max(0.0, math.fsum(terms))


def expected_mi(table: ContingencyTable) -> float:
    """E{MI} under the fixed-marginal (hypergeometric) permutation model.

    For each cell, n_ij is hypergeometric over the shared total; the
    probability mass comes from log-factorials for numerical range.
    """
    n = table.total
    log_fact = _log_factorials(n)
    terms = []
    for a in table.row_marginals:
        log_pa = math.log(a / n)
        for b in table.col_marginals:
            log_pb = math.log(b / n)
            lo = max(1, a + b - n)
            hi = min(a, b)
            # Grouped so swapping the two labelings (a <-> b) reproduces the
            # exact same float operations: AMI stays bit-identical under swap.
            marg = (log_fact[a] + log_fact[b]) + (log_fact[n - a] + log_fact[n - b])
            for nij in range(lo, hi + 1):
                pn = nij / n
                mi_term = pn * (math.log(pn) - (log_pa + log_pb))
                log_prob = (
                    marg
                    - log_fact[n]
                    - log_fact[nij]
                    - (log_fact[a - nij] + log_fact[b - nij])
                    - log_fact[n - a - b + nij]
                )
                terms.append(mi_term * math.exp(log_prob))
    return math.fsum(terms)


def _log_factorials(n: int) -> list[float]:
    out = [0.0] * (n + 1)
    for i in range(2, n + 1):
        out[i] = out[i - 1] + math.log(i)
    return out


def adjusted_mutual_information(u: Sequence[Hashable], v: Sequence[Hashable]) -> float:
    """AMI = (MI - E{MI}) / (max(H(u), H(v)) - E{MI}).

    1.0 for identical partitions, ~0 for random ones. A zero denominator
    only happens when the marginals pin MI to its maximum for every
    permutation (informationally identical partitions), so it maps to 1.0.
    """
    if len(u) != len(v):
        raise LengthMismatch(f"labelings have lengths {len(u)} and {len(v)}")
    if len(u) == 0:
        raise LengthMismatch("labelings must be non-empty")
    table = contingency(u, v)
    mi = mutual_information(table)
    emi = expected_mi(table)
    normalizer = max(entropy(u), entropy(v))
    denominator = normalizer - emi
    if denominator == 0.0:
        return 1.0
    return (mi - emi) / denominator


@dataclass(frozen=True)
class RunScore:
    """One evaluation run: a query or dataset id with its score."""

    run_id: str
    score: Optional[float]
    skipped: bool = False
    reason: str = ""


@dataclass(frozen=True)
class EvalReport:
    """Scores of one metric over a batch of runs, with mean and population std."""

    metric: str
    pruning: bool
    runs: tuple[RunScore, ...] = field(default_factory=tuple)

    @property
    def scores(self) -> list[float]:
        return [r.score for r in self.runs if not r.skipped and r.score is not None]

    @property
    def mean(self) -> Optional[float]:
        scores = self.scores
        return float(np.mean(scores)) if scores else None

    @property
    def std(self) -> Optional[float]:
        scores = self.scores
        return float(np.std(scores)) if scores else None

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "pruning": self.pruning,
            "runs": [
                {"id": r.run_id, "score": r.score, "skipped": r.skipped}
                for r in self.runs
            ],
            "mean": self.mean,
            "std": self.std,
        }

    def to_csv(self) -> str:
        lines = ["metric,pruning,id,score,skipped,mean,std"]
        mean = "" if self.mean is None else repr(self.mean)
        std = "" if self.std is None else repr(self.std)
        for r in self.runs:
            score = "" if r.score is None else repr(r.score)
            lines.append(
                f"{self.metric},{str(self.pruning).lower()},{r.run_id},"
                f"{score},{str(r.skipped).lower()},{mean},{std}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class EvalConfig:
    """Knobs shared by the internal and external validation runs.

    The harness evaluates short sounds only (``max_duration`` seconds,
    default 10); the data model itself is duration-agnostic. Set it to
    None to evaluate everything.
    """

    seed: int = 0
    prune: bool = False
    scheme: "FeatureScheme | None" = None  # default picked in __post_init__
    k_override: Optional[int] = None
    lsa_dim: int = 100
    vocab_size: int = 5000
    max_duration: Optional[float] = 10.0

    def __post_init__(self):
        if self.scheme is None:
            object.__setattr__(self, "scheme", FeatureScheme.HANDCRAFTED_STATS)

    def job(self) -> "ClusterJob":
        return ClusterJob(
            scheme=self.scheme,
            seed=self.seed,
            k_override=self.k_override,
            prune=False,  # pruning is handled by the harness, not the pipeline
        )

    def duration_filter(self, corpus: Corpus) -> Corpus:
        if self.max_duration is None:
            return corpus
        kept = tuple(doc for doc in corpus.documents if doc.duration <= self.max_duration)
        return corpus if len(kept) == len(corpus.documents) else Corpus(documents=kept)


def _clustered_labels(corpus: Corpus, config: EvalConfig) -> tuple[list[int], "ClusterJobResult"]:
    result = run_clustering(corpus, config.job())
    return [result.partition.assignment[i] for i in range(len(corpus))], result


def _pruned_labels(result: "ClusterJobResult") -> tuple[dict[int, int], set[int]]:
    """Assignment after discarding the lowest-confidence cluster, plus the
    dropped node indices."""
    prune = cluster_mod.prune_lowest(result.graph, result.partition)
    return dict(prune.partition.assignment), set(prune.pruned_members)


def internal_validation_run(
    queries: Sequence[tuple[str, Corpus]],
    config: EvalConfig = EvalConfig(),
) -> EvalReport:
    """Calinski-Harabasz of audio-derived cluster labels against tag-LSA features.

    The tag vocabulary and the LSA model are fit once over all queried
    documents; each query is then clustered on its audio features and scored
    in the shared tag space. Per-query failures become skipped runs.
    """
    filtered = [(query_id, config.duration_filter(corpus)) for query_id, corpus in queries]
    all_docs = [doc for _, corpus in filtered for doc in corpus.documents]
    vocab = build_tag_vocabulary(all_docs, config.vocab_size)
    lsa: Optional[ProjectionModel] = None
    if len(all_docs) >= 2 and len(vocab) > 0:
        lsa = fit_projection(
            tag_matrix(all_docs, vocab), ProjectionKind.LSA, config.lsa_dim
        )

    runs = []
    for query_id, corpus in filtered:
        try:
            if lsa is None:
                raise DegenerateClustering("no tag vocabulary to score against")
            labels, result = _clustered_labels(corpus, config)
            tag_features = apply_projection_matrix(
                tag_matrix(corpus.documents, vocab), lsa
            )
            if config.prune:
                assignment, dropped = _pruned_labels(result)
                keep = [i for i in range(len(corpus)) if i not in dropped]
                tag_features = tag_features[keep]
                labels = [assignment[i] for i in keep]
            score = calinski_harabasz(tag_features, labels)
            runs.append(RunScore(run_id=query_id, score=score))
        except SoundsiftError as exc:
            runs.append(
                RunScore(run_id=query_id, score=None, skipped=True, reason=exc.code)
            )
    return EvalReport(metric="CHI", pruning=config.prune, runs=tuple(runs))


def external_validation_run(
    datasets: Sequence[tuple[str, LabeledDataset]],
    config: EvalConfig = EvalConfig(),
) -> EvalReport:
    """AMI between ground-truth classes and the audio clustering, per dataset.

    With pruning, members of the discarded cluster are dropped from both
    labelings before scoring.
    """
    runs = []
    for name, dataset in datasets:
        try:
            corpus = config.duration_filter(dataset.corpus)
            predicted, result = _clustered_labels(corpus, config)
            labeled = [i for i, doc in enumerate(corpus.documents) if doc.id in dataset.labels]
            if config.prune:
                assignment, dropped = _pruned_labels(result)
                labeled = [i for i in labeled if i not in dropped]
                predicted_kept = [assignment[i] for i in labeled]
            else:
                predicted_kept = [predicted[i] for i in labeled]
            truth = [dataset.labels[corpus.documents[i].id] for i in labeled]
            if not truth:
                raise DegenerateClustering("no labeled documents left to score")
            score = adjusted_mutual_information(truth, predicted_kept)
            runs.append(RunScore(run_id=name, score=score))
        except SoundsiftError as exc:
            runs.append(RunScore(run_id=name, score=None, skipped=True, reason=exc.code))
    return EvalReport(metric="AMI", pruning=config.prune, runs=tuple(runs))
