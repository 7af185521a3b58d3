import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from soundsift.corpus import Corpus, SoundDocument
from soundsift.graph import KnnGraph


def doc(doc_id: str, clip=None, frames=None, tags=(), name="", duration=1.0, preview=None):
    return SoundDocument(
        id=doc_id,
        name=name or doc_id,
        tags=tuple(tags),
        duration=duration,
        preview_url=preview,
        frame_features=np.asarray(frames, dtype=float) if frames is not None else None,
        clip_vector=np.asarray(clip, dtype=float) if clip is not None else None,
    )


def corpus_of(docs) -> Corpus:
    return Corpus(documents=tuple(docs))


def graph_from_edges(n: int, edges) -> KnnGraph:
    """Hand-built graph for metric tests; k_used is informational here."""
    normalized = frozenset((a, b) if a < b else (b, a) for a, b in edges)
    from soundsift.graph import _adjacency_from_edges

    return KnnGraph(
        ids=tuple(str(i) for i in range(n)),
        edges=normalized,
        k_used=1,
        adjacency=_adjacency_from_edges(n, normalized),
    )


def blob_corpus(
    rng: np.random.Generator,
    centers: np.ndarray,
    points_per_blob: int,
    std: float = 1.0,
    tag_per_blob: bool = False,
) -> tuple[Corpus, list[int]]:
    """Gaussian blobs as clip-vector documents; returns (corpus, blob index per doc).

    With tag_per_blob, every document carries its blob's tag plus a unique
    one, so tag vectors mirror the blobs without being identical inside one.
    """
    docs = []
    truth = []
    for blob_id, center in enumerate(centers):
        for j in range(points_per_blob):
            vec = rng.normal(0.0, std, size=center.shape) + center
            tags = (f"blob{blob_id}", f"only_{blob_id}_{j}") if tag_per_blob else ()
            docs.append(doc(f"b{blob_id}_{j}", clip=vec, tags=tags))
            truth.append(blob_id)
    return corpus_of(docs), truth


def corpus_file_payload(docs) -> bytes:
    documents = []
    for d in docs:
        obj = {"id": d.id, "name": d.name, "tags": list(d.tags), "duration": d.duration}
        if d.preview_url is not None:
            obj["preview_url"] = d.preview_url
        if d.frame_features is not None:
            obj["frame_features"] = d.frame_features.tolist()
        if d.clip_vector is not None:
            obj["clip_vector"] = d.clip_vector.tolist()
        documents.append(obj)
    return json.dumps({"documents": documents}).encode()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
