"""soundsift: graph-based search result clustering for sound collections.

Partitions a query's result set into labeled, confidence-scored clusters
via a k-NN graph and modularity-based community detection, and ships the
matching internal (CHI over tag-LSA features) and external (AMI over
ground-truth labels) evaluation harness.
"""

from .cluster import (
    ClusterSummary,
    Partition,
    cluster_confidence,
    detect_communities,
    label_clusters,
    modularity,
    prune_lowest,
)
from .corpus import Corpus, LabeledDataset, SoundDocument, parse_corpus, parse_labeled_dataset
from .evaluate import (
    EvalConfig,
    EvalReport,
    adjusted_mutual_information,
    calinski_harabasz,
    contingency,
    entropy,
    expected_mi,
    external_validation_run,
    internal_validation_run,
    mutual_information,
)
from .features import (
    FeatureScheme,
    ProjectionKind,
    ProjectionModel,
    TagVocabulary,
    aggregate_frames,
    apply_projection,
    build_tag_vocabulary,
    fit_projection,
    vectorize_tags,
)
from .graph import GraphConfig, KnnGraph, build_knn_graph, default_k, knn_search
from .pipeline import ClusterJob, ClusterJobResult, run_clustering

__version__ = "0.1.0"

__all__ = [
    "ClusterJob",
    "ClusterJobResult",
    "ClusterSummary",
    "Corpus",
    "EvalConfig",
    "EvalReport",
    "FeatureScheme",
    "GraphConfig",
    "KnnGraph",
    "LabeledDataset",
    "Partition",
    "ProjectionKind",
    "ProjectionModel",
    "SoundDocument",
    "TagVocabulary",
    "adjusted_mutual_information",
    "aggregate_frames",
    "apply_projection",
    "build_knn_graph",
    "build_tag_vocabulary",
    "calinski_harabasz",
    "cluster_confidence",
    "contingency",
    "default_k",
    "detect_communities",
    "entropy",
    "expected_mi",
    "external_validation_run",
    "fit_projection",
    "internal_validation_run",
    "knn_search",
    "label_clusters",
    "modularity",
    "mutual_information",
    "parse_corpus",
    "parse_labeled_dataset",
    "prune_lowest",
    "run_clustering",
    "vectorize_tags",
]
