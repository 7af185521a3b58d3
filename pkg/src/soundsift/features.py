"""Fixed-length feature vectors for sound documents.

Two concerns live here:

* turning per-frame feature matrices into one vector per document, either
  by summary statistics over the frames and their discrete derivatives
  (handcrafted descriptors) or by a plain mean (embedding models);
* linear dimensionality reduction, fit once over a collection and applied
  per document: centered PCA for dense audio features, uncentered
  truncated SVD (LSA) for sparse binary tag vectors.

Aggregation layout for the statistics scheme, for ``d`` frame dimensions:
three blocks of ``4*d`` values, one per derivative order (0, 1, 2), each
block being ``min(d) | max(d) | mean(d) | var(d)``. Derivatives are forward
differences over consecutive frames; when a difference sequence would be
empty (too few frames) a single all-zero row stands in for it.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .corpus import Corpus, SoundDocument
from .errors import DimensionMismatch, EmptyFrames, MalformedJson, TooFewSamples

DEFAULT_PROJECTION_DIM = 100
DEFAULT_VOCAB_SIZE = 5000

# Singular values below s_max * max(n, d) * eps are treated as rank deficiency.
_RANK_RTOL_FACTOR = np.finfo(float).eps


class FeatureScheme(enum.Enum):
    """How per-frame features collapse into one vector per document."""

    HANDCRAFTED_STATS = "stats"
    EMBEDDING_MEAN = "mean"

    @classmethod
    def from_name(cls, name: str) -> "FeatureScheme":
        for scheme in cls:
            if scheme.value == name or scheme.name.lower() == name.lower():
                return scheme
        raise ValueError(f"unknown feature scheme {name!r}")


def _forward_differences(frames: np.ndarray) -> np.ndarray:
    if frames.shape[0] < 2:
        return np.zeros((1, frames.shape[1]))
    return np.diff(frames, axis=0)


def _stat_block(rows: np.ndarray) -> np.ndarray:
    return np.concatenate(
        [rows.min(axis=0), rows.max(axis=0), rows.mean(axis=0), rows.var(axis=0)]
    )


def aggregate_frames(frames: np.ndarray, scheme: FeatureScheme) -> np.ndarray:
    """Summarize a frames x dims matrix into one fixed-length vector.

    EMBEDDING_MEAN yields ``d`` values, HANDCRAFTED_STATS ``12*d``
    (4 statistics x 3 derivative orders).
    """
    frames = np.asarray(frames, dtype=float)
    if frames.ndim != 2 or frames.shape[0] == 0:
        raise EmptyFrames("frame matrix must have at least one row")
    if scheme is FeatureScheme.EMBEDDING_MEAN:
        return frames.mean(axis=0)
    d1 = _forward_differences(frames)
    d2 = _forward_differences(d1)
    return np.concatenate([_stat_block(frames), _stat_block(d1), _stat_block(d2)])


def document_vector(
    doc: SoundDocument,
    scheme: FeatureScheme = FeatureScheme.HANDCRAFTED_STATS,
    use_frames: bool = False,
) -> Optional[np.ndarray]:
    """The document's raw feature vector, or None if it has no features.

    A precomputed clip vector wins over frame aggregation unless aggregation
    is explicitly requested with ``use_frames`` (then a document without
    frame features yields None).
    """
    if use_frames:
        if doc.frame_features is not None:
            return aggregate_frames(doc.frame_features, scheme)
        return None
    if doc.clip_vector is not None:
        return doc.clip_vector
    if doc.frame_features is not None:
        return aggregate_frames(doc.frame_features, scheme)
    return None


class ProjectionKind(enum.Enum):
    PCA = "pca"
    LSA = "lsa"


@dataclass(frozen=True)
class ProjectionModel:
    """A fitted linear projection: v -> components @ (v - mean).

    Component rows are orthonormal. ``scale`` is only set when the model was
    fit with column standardization; the stored components then apply to
    (v - mean) / scale.
    """

    kind: ProjectionKind
    input_dim: int
    output_dim: int
    mean: np.ndarray
    components: np.ndarray
    explained_variance: np.ndarray
    scale: Optional[np.ndarray] = None

    def to_json(self) -> str:
        obj = {
            "kind": self.kind.value,
            "input_dim": self.input_dim,
            "output_dim": self.output_dim,
            "mean": self.mean.tolist(),
            "components": self.components.tolist(),
        }
        if self.scale is not None:
            obj["scale"] = self.scale.tolist()
        return json.dumps(obj)

    @classmethod
    def from_json(cls, data: str | bytes) -> "ProjectionModel":
        try:
            obj = json.loads(data)
            components = np.asarray(obj["components"], dtype=float)
            return cls(
                kind=ProjectionKind(obj["kind"]),
                input_dim=int(obj["input_dim"]),
                output_dim=int(obj["output_dim"]),
                mean=np.asarray(obj["mean"], dtype=float),
                components=components,
                explained_variance=np.zeros(components.shape[0]),
                scale=np.asarray(obj["scale"], dtype=float) if "scale" in obj else None,
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise MalformedJson(f"not a valid projection model: {exc}") from exc


def _numerical_rank(singular_values: np.ndarray, n: int, d: int) -> int:
    if singular_values.size == 0:
        return 0
    cutoff = singular_values[0] * max(n, d) * _RANK_RTOL_FACTOR
    return int(np.sum(singular_values > cutoff))


def _fix_component_signs(components: np.ndarray) -> np.ndarray:
    """Make each component's largest-magnitude entry positive (sign convention
    so refits are bit-identical)."""
    if components.size == 0:
        return components
    anchors = components[np.arange(components.shape[0]), np.argmax(np.abs(components), axis=1)]
    signs = np.where(anchors < 0, -1.0, 1.0)
    return components * signs[:, None]


def fit_projection(
    samples: np.ndarray,
    kind: ProjectionKind,
    output_dim: int,
    standardize: bool = False,
) -> ProjectionModel:
    """Fit a PCA or LSA projection over a samples x dims matrix.

    PCA centers (optionally standardizes) the columns and keeps the top
    eigenvectors of the sample covariance in decreasing explained-variance
    order. LSA keeps the top right-singular directions of the raw matrix,
    with no centering. The effective output dimension is clamped to the
    numerical rank of the (centered) matrix.
    """
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 2 or samples.shape[0] < 2:
        raise TooFewSamples("projection fitting needs at least 2 samples")
    if output_dim < 1:
        raise ValueError("output_dim must be >= 1")
    n, d = samples.shape

    scale = None
    if kind is ProjectionKind.PCA:
        mean = samples.mean(axis=0)
        work = samples - mean
        if standardize:
            scale = work.std(axis=0)
            scale = np.where(scale > 0, scale, 1.0)
            work = work / scale
    else:
        mean = np.zeros(d)
        work = samples

    # Right-singular vectors of the working matrix are the covariance
    # eigenvectors (PCA) / LSA directions; one SVD covers both kinds.
    _, singular_values, vt = np.linalg.svd(work, full_matrices=False)
    rank = _numerical_rank(singular_values, n, d)
    k = max(1, min(output_dim, rank)) if rank > 0 else 1
    components = _fix_component_signs(vt[:k])
    explained = (singular_values[:k] ** 2) / n

    return ProjectionModel(
        kind=kind,
        input_dim=d,
        output_dim=k,
        mean=mean,
        components=components,
        explained_variance=explained,
        scale=scale,
    )


def apply_projection(v: np.ndarray, model: ProjectionModel) -> np.ndarray:
    """Project one vector; returns ``output_dim`` coordinates."""
    v = np.asarray(v, dtype=float)
    if v.shape != (model.input_dim,):
        raise DimensionMismatch(
            f"vector has {v.shape} entries, model expects {model.input_dim}"
        )
    centered = v - model.mean
    if model.scale is not None:
        centered = centered / model.scale
    return model.components @ centered


def apply_projection_matrix(samples: np.ndarray, model: ProjectionModel) -> np.ndarray:
    """Project many rows at once."""
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 2 or samples.shape[1] != model.input_dim:
        raise DimensionMismatch(
            f"matrix has {samples.shape[1] if samples.ndim == 2 else '?'} columns, "
            f"model expects {model.input_dim}"
        )
    centered = samples - model.mean
    if model.scale is not None:
        centered = centered / model.scale
    return centered @ model.components.T


@dataclass(frozen=True)
class TagVocabulary:
    """Most frequent tags, by document frequency, most frequent first."""

    entries: tuple[tuple[str, int], ...]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self.entries)

    def index_of(self) -> dict[str, int]:
        return {tag: i for i, (tag, _) in enumerate(self.entries)}


def build_tag_vocabulary(
    corpus: Corpus | Sequence[SoundDocument],
    vocab_size: int = DEFAULT_VOCAB_SIZE,
) -> TagVocabulary:
    """Top ``vocab_size`` tags by document frequency; ties break
    lexicographically ascending. Accepts a corpus or a bare document list
    (the latter may repeat ids, e.g. a union of query result sets)."""
    if vocab_size < 1:
        raise ValueError("vocab_size must be >= 1")
    documents = corpus.documents if isinstance(corpus, Corpus) else corpus
    counts: Counter[str] = Counter()
    for doc in documents:
        counts.update(set(doc.tags))
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return TagVocabulary(entries=tuple(ordered[:vocab_size]))


def vectorize_tags(doc: SoundDocument, vocab: TagVocabulary) -> np.ndarray:
    """Binary presence vector over the vocabulary."""
    present = set(doc.tags)
    return np.array([1.0 if tag in present else 0.0 for tag, _ in vocab.entries])


def tag_matrix(documents: Sequence[SoundDocument], vocab: TagVocabulary) -> np.ndarray:
    """Stacked vectorize_tags rows in document order."""
    if not documents:
        return np.zeros((0, len(vocab)))
    return np.vstack([vectorize_tags(doc, vocab) for doc in documents])
