"""End-to-end clustering of one result set.

Feature assembly -> k-NN graph -> community detection -> confidence ->
optional pruning -> labels. Both the CLI and the HTTP service call into
run_clustering and serialize the same response dictionary, so their
outputs stay byte-identical for a fixed (documents, seed, options) input.

Pruned documents are not dropped: they are reported in ``unclustered``
and their graph nodes carry a null cluster, so a results page can still
show every hit. The reported modularity is that of the detected partition
on the full graph, pre-pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import cluster as cl
from .corpus import Corpus, SoundDocument
from .errors import DimensionMismatch, MissingFeatures, TooFewNodes
from .features import FeatureScheme, ProjectionModel, apply_projection_matrix, document_vector
from .graph import GraphConfig, KnnGraph, build_knn_graph


@dataclass(frozen=True)
class ClusterJob:
    """Options for one clustering run.

    ``use_frames`` forces frame aggregation even for documents that carry a
    precomputed clip vector (which otherwise wins).
    """

    scheme: FeatureScheme = FeatureScheme.HANDCRAFTED_STATS
    seed: int = 0
    k_override: Optional[int] = None
    prune: bool = False
    n_labels: int = cl.DEFAULT_NUM_LABELS
    projection: Optional[ProjectionModel] = None
    use_frames: bool = False


@dataclass(frozen=True)
class ClusterJobResult:
    """Everything a caller needs to present one clustered result set."""

    graph: KnnGraph
    partition: cl.Partition
    summaries: tuple[cl.ClusterSummary, ...]
    pruned_summary: Optional[cl.ClusterSummary]
    unclustered: tuple[str, ...]
    modularity: float
    seed: int

    def node_cluster(self, node: int) -> Optional[int]:
        return self.partition.assignment.get(node)

    def to_response(self, documents: Sequence[SoundDocument]) -> dict:
        """The wire shape served by the HTTP facade and written by the CLI."""
        nodes = []
        for i, doc in enumerate(documents):
            nodes.append(
                {
                    "id": doc.id,
                    "index": i,
                    "name": doc.name,
                    "tags": list(doc.tags),
                    "preview_url": doc.preview_url,
                    "cluster": self.node_cluster(i),
                }
            )
        return {
            "clusters": [
                {
                    "id": s.cluster_id,
                    "members": list(s.members),
                    "confidence": s.confidence,
                    "labels": list(s.labels),
                    "pruned": s.pruned,
                }
                for s in self.summaries
            ],
            "unclustered": list(self.unclustered),
            "modularity": self.modularity,
            "seed": self.seed,
            "graph": {
                "nodes": nodes,
                "edges": [list(edge) for edge in sorted(self.graph.edges)],
                "k": self.graph.k_used,
            },
        }


def feature_matrix(
    documents: Sequence[SoundDocument],
    scheme: FeatureScheme = FeatureScheme.HANDCRAFTED_STATS,
    use_frames: bool = False,
) -> np.ndarray:
    """Stack per-document vectors; every document must have features of one width."""
    vectors = []
    width = None
    for doc in documents:
        vec = document_vector(doc, scheme, use_frames=use_frames)
        if vec is None:
            if use_frames:
                raise MissingFeatures(
                    doc.id, f"document {doc.id!r} has no frame features to aggregate"
                )
            raise MissingFeatures(doc.id)
        if width is None:
            width = vec.shape[0]
        elif vec.shape[0] != width:
            raise DimensionMismatch(
                f"document {doc.id!r} yields {vec.shape[0]} feature dims, expected {width}"
            )
        vectors.append(vec)
    return np.vstack(vectors)


def run_clustering(corpus: Corpus, job: ClusterJob = ClusterJob()) -> ClusterJobResult:
    documents = corpus.documents
    if len(documents) < 2:
        raise TooFewNodes("clustering needs at least 2 documents")

    vectors = feature_matrix(documents, job.scheme, use_frames=job.use_frames)
    if job.projection is not None:
        vectors = apply_projection_matrix(vectors, job.projection)

    graph = build_knn_graph(
        vectors, GraphConfig(k_override=job.k_override), ids=[d.id for d in documents]
    )
    detected = cl.detect_communities(graph, seed=job.seed)
    q = cl.modularity(graph, detected)

    if job.prune and detected.num_clusters >= 2:
        prune = cl.prune_lowest(graph, detected)
        pruned_member_set = set(prune.pruned_members)
        working_graph = graph.subgraph_without(pruned_member_set)
        final = prune.partition
        confidences = cl.all_confidences(working_graph, final)
        pre_conf = cl.cluster_confidence(graph, detected, prune.pruned_cluster)
        pruned_labels = cl.label_clusters(detected, corpus, job.n_labels)[prune.pruned_cluster]
        pruned_summary = cl.ClusterSummary(
            cluster_id=prune.pruned_cluster,
            members=tuple(documents[i].id for i in prune.pruned_members),
            size=len(prune.pruned_members),
            confidence=pre_conf,
            labels=tuple(pruned_labels),
            pruned=True,
        )
        unclustered = tuple(documents[i].id for i in prune.pruned_members)
    else:
        final = detected
        confidences = cl.all_confidences(graph, final)
        pruned_summary = None
        unclustered = ()

    labels = cl.label_clusters(final, corpus, job.n_labels)
    summaries = tuple(
        cl.ClusterSummary(
            cluster_id=c,
            members=tuple(documents[i].id for i in final.members_of(c)),
            size=len(final.members_of(c)),
            confidence=confidences[c],
            labels=tuple(labels[c]),
            pruned=False,
        )
        for c in range(final.num_clusters)
    )
    return ClusterJobResult(
        graph=graph,
        partition=final,
        summaries=summaries,
        pruned_summary=pruned_summary,
        unclustered=unclustered,
        modularity=q,
        seed=job.seed,
    )
