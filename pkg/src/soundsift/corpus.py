"""Document model and ingestion for sound result sets.

A corpus file is a JSON object::

    {"documents": [{"id": str, "name": str, "tags": [str], "duration": num,
                    "preview_url": str?, "frame_features": [[num]]?,
                    "clip_vector": [num]?}, ...]}

A labeled dataset adds ``"labels": {id: class}``.

Document order is preserved end to end: it is the search-ranking order and
downstream node indices refer back to it. Corpora are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateId,
    MalformedJson,
    SingleClass,
    UnknownId,
)


def _normalize_tags(tags: Sequence[str]) -> tuple[str, ...]:
    """Case-fold and deduplicate, keeping first-occurrence order."""
    seen: dict[str, None] = {}
    for tag in tags:
        seen.setdefault(tag.lower(), None)
    return tuple(seen)


def _optional_array_equal(a: Optional[np.ndarray], b: Optional[np.ndarray]) -> bool:
    if a is None or b is None:
        return a is b
    return a.shape == b.shape and bool(np.array_equal(a, b))


@dataclass(frozen=True, eq=False)
class SoundDocument:
    """One retrievable sound with its metadata and precomputed features."""

    id: str
    name: str = ""
    tags: tuple[str, ...] = ()
    duration: float = 0.0
    preview_url: Optional[str] = None
    frame_features: Optional[np.ndarray] = field(default=None, repr=False)
    clip_vector: Optional[np.ndarray] = field(default=None, repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SoundDocument):
            return NotImplemented
        return (
            self.id == other.id
            and self.name == other.name
            and self.tags == other.tags
            and self.duration == other.duration
            and self.preview_url == other.preview_url
            and _optional_array_equal(self.frame_features, other.frame_features)
            and _optional_array_equal(self.clip_vector, other.clip_vector)
        )

    def __post_init__(self):
        if not self.id:
            raise MalformedJson("document id must be a non-empty string")
        if self.duration < 0:
            raise MalformedJson(f"document {self.id!r}: duration must be non-negative")
        object.__setattr__(self, "tags", _normalize_tags(self.tags))
        if self.frame_features is not None:
            frames = np.asarray(self.frame_features, dtype=float)
            if frames.ndim != 2:
                raise DimensionMismatch(
                    f"document {self.id!r}: frame_features rows have unequal dimensionality"
                )
            object.__setattr__(self, "frame_features", frames)
        if self.clip_vector is not None:
            vec = np.asarray(self.clip_vector, dtype=float)
            if vec.ndim != 1:
                raise DimensionMismatch(f"document {self.id!r}: clip_vector must be a flat vector")
            object.__setattr__(self, "clip_vector", vec)

    @property
    def has_features(self) -> bool:
        return self.frame_features is not None or self.clip_vector is not None


@dataclass(frozen=True)
class Corpus:
    """An ordered, id-unique collection of sound documents."""

    documents: tuple[SoundDocument, ...]
    feature_dim: Optional[int] = None

    def __post_init__(self):
        ids = set()
        for doc in self.documents:
            if doc.id in ids:
                raise DuplicateId(doc.id)
            ids.add(doc.id)
        dim = self.feature_dim
        for doc in self.documents:
            if doc.clip_vector is None:
                continue
            if dim is None:
                dim = int(doc.clip_vector.shape[0])
            elif doc.clip_vector.shape[0] != dim:
                raise DimensionMismatch(
                    f"document {doc.id!r}: clip_vector has {doc.clip_vector.shape[0]} "
                    f"dims, corpus has {dim}"
                )
        object.__setattr__(self, "feature_dim", dim)

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self) -> Iterator[SoundDocument]:
        return iter(self.documents)

    def __getitem__(self, index: int) -> SoundDocument:
        return self.documents[index]

    def by_id(self, doc_id: str) -> SoundDocument:
        for doc in self.documents:
            if doc.id == doc_id:
                return doc
        raise UnknownId(doc_id)

    def subset(self, ids: Sequence[str]) -> "Corpus":
        """New corpus restricted to ``ids``, keeping this corpus's order semantics:
        documents appear in the order the ids are given."""
        index = {doc.id: doc for doc in self.documents}
        picked = []
        for doc_id in ids:
            if doc_id not in index:
                raise UnknownId(doc_id)
            picked.append(index[doc_id])
        return Corpus(documents=tuple(picked))


@dataclass(frozen=True)
class LabeledDataset:
    """A corpus plus ground-truth class labels for external evaluation."""

    corpus: Corpus
    labels: Mapping[str, str]

    def __post_init__(self):
        known = {doc.id for doc in self.corpus.documents}
        for doc_id in self.labels:
            if doc_id not in known:
                raise UnknownId(doc_id)
        if len(set(self.labels.values())) < 2:
            raise SingleClass("a labeled dataset needs at least 2 distinct classes")

    def label_vector(self) -> list[str]:
        """Ground-truth classes in document order, restricted to labeled documents."""
        return [self.labels[doc.id] for doc in self.corpus.documents if doc.id in self.labels]

    def labeled_documents(self) -> list[SoundDocument]:
        return [doc for doc in self.corpus.documents if doc.id in self.labels]


def _document_from_obj(obj: dict) -> SoundDocument:
    if not isinstance(obj, dict):
        raise MalformedJson("each document must be a JSON object")
    if "id" not in obj or not isinstance(obj["id"], str):
        raise MalformedJson("document is missing a string 'id'")
    tags = obj.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise MalformedJson(f"document {obj['id']!r}: tags must be a list of strings")
    duration = obj.get("duration", 0.0)
    if not isinstance(duration, (int, float)) or isinstance(duration, bool):
        raise MalformedJson(f"document {obj['id']!r}: duration must be a number")
    frames = obj.get("frame_features")
    if frames is not None:
        if (
            not isinstance(frames, list)
            or not frames
            or not all(isinstance(row, list) for row in frames)
        ):
            raise MalformedJson(f"document {obj['id']!r}: frame_features must be a matrix")
        width = len(frames[0])
        if any(len(row) != width for row in frames):
            raise DimensionMismatch(
                f"document {obj['id']!r}: frame_features rows have unequal dimensionality"
            )
    clip = obj.get("clip_vector")
    if clip is not None and not isinstance(clip, list):
        raise MalformedJson(f"document {obj['id']!r}: clip_vector must be a list of numbers")
    return SoundDocument(
        id=obj["id"],
        name=obj.get("name", ""),
        tags=tuple(tags),
        duration=float(duration),
        preview_url=obj.get("preview_url"),
        frame_features=np.asarray(frames, dtype=float) if frames is not None else None,
        clip_vector=np.asarray(clip, dtype=float) if clip is not None else None,
    )


def _load_root(data: bytes | str) -> dict:
    try:
        root = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"not valid JSON: {exc}") from exc
    if not isinstance(root, dict) or not isinstance(root.get("documents"), list):
        raise MalformedJson("top level must be an object with a 'documents' array")
    return root


def parse_corpus(data: bytes | str) -> Corpus:
    """Parse and validate a document file.

    Tags are case-folded and deduplicated. Missing features are not an
    error here; they only matter once a document enters clustering.
    """
    root = _load_root(data)
    docs = tuple(_document_from_obj(obj) for obj in root["documents"])
    return Corpus(documents=docs)


def parse_labeled_dataset(data: bytes | str) -> LabeledDataset:
    """Parse a document file carrying a ``labels`` section."""
    root = _load_root(data)
    labels = root.get("labels")
    if not isinstance(labels, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in labels.items()
    ):
        raise MalformedJson("'labels' must map document ids to class strings")
    corpus = Corpus(documents=tuple(_document_from_obj(obj) for obj in root["documents"]))
    return LabeledDataset(corpus=corpus, labels=dict(labels))


def serialize_corpus(corpus: Corpus) -> str:
    """Inverse of parse_corpus: parse(serialize(parse(x))) == parse(x)."""
    documents = []
    for doc in corpus.documents:
        obj: dict = {
            "id": doc.id,
            "name": doc.name,
            "tags": list(doc.tags),
            "duration": doc.duration,
        }
        if doc.preview_url is not None:
            obj["preview_url"] = doc.preview_url
        if doc.frame_features is not None:
            obj["frame_features"] = doc.frame_features.tolist()
        if doc.clip_vector is not None:
            obj["clip_vector"] = doc.clip_vector.tolist()
        documents.append(obj)
    return json.dumps({"documents": documents})
