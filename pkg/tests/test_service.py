import json

import numpy as np
import pytest
from fastapi.testclient import TestClient

from soundsift.service import ServiceSettings, create_app

from conftest import blob_corpus, corpus_file_payload, doc


@pytest.fixture
def client():
    return TestClient(create_app(ServiceSettings()))


def inline_request(docs, **extra):
    payload = json.loads(corpus_file_payload(docs))
    payload.update(extra)
    return payload


def two_doc_request(**extra):
    return inline_request(
        [doc("a", clip=[0.0, 0.0]), doc("b", clip=[1.0, 0.0])], **extra
    )


# -------------------------------------------------------------------- cluster

def test_cluster_two_docs_minimal_graph(client):
    response = client.post("/v1/cluster", json=two_doc_request())
    assert response.status_code == 200
    body = response.json()
    assert len(body["clusters"]) == 1
    assert body["clusters"][0]["confidence"] == 1.0
    assert body["graph"]["edges"] == [[0, 1]]
    assert body["unclustered"] == []
    assert "X-Pipeline-Ms" in response.headers
    assert float(response.headers["X-Pipeline-Ms"]) >= 0.0


def test_cluster_deterministic_bytes(client):
    request = two_doc_request(seed=7)
    first = client.post("/v1/cluster", json=request)
    second = client.post("/v1/cluster", json=request)
    assert first.content == second.content


def test_cluster_single_doc_rejected(client):
    response = client.post(
        "/v1/cluster", json=inline_request([doc("only", clip=[1.0])])
    )
    assert response.status_code == 400
    assert response.json()["code"] == "TooFewNodes"


def test_cluster_needs_exactly_one_document_source(client):
    response = client.post("/v1/cluster", json={"seed": 0})
    assert response.status_code == 400
    response = client.post(
        "/v1/cluster", json=two_doc_request(document_ids=["a", "b"])
    )
    assert response.status_code == 400


def test_cluster_missing_features_flagged(client):
    response = client.post(
        "/v1/cluster", json=inline_request([doc("a", clip=[1.0]), doc("b")])
    )
    assert response.status_code == 400
    assert response.json()["code"] == "MissingFeatures"


def test_cluster_413_over_ceiling():
    app = create_app(ServiceSettings(document_ceiling=5))
    client = TestClient(app)
    docs = [doc(f"d{i}", clip=[float(i)]) for i in range(6)]
    response = client.post("/v1/cluster", json=inline_request(docs))
    assert response.status_code == 413
    assert response.json()["code"] == "TooManyDocuments"


def test_cluster_max_results_truncates(client):
    docs = [doc(f"d{i}", clip=[float(i), 0.0]) for i in range(10)]
    response = client.post("/v1/cluster", json=inline_request(docs, max_results=4))
    body = response.json()
    assert len(body["graph"]["nodes"]) == 4
    assert [n["id"] for n in body["graph"]["nodes"]] == ["d0", "d1", "d2", "d3"]


def test_cluster_response_partitions_all_nodes(client):
    rng = np.random.default_rng(5)
    corpus, _ = blob_corpus(rng, rng.normal(size=(3, 4)) * 30.0, 10)
    request = inline_request(list(corpus.documents), prune=True, seed=1)
    body = client.post("/v1/cluster", json=request).json()
    clustered = [m for c in body["clusters"] for m in c["members"]]
    everything = sorted(clustered + body["unclustered"])
    assert everything == sorted(d.id for d in corpus.documents)
    assert len(set(everything)) == len(everything)
    # node annotations carry the cluster assignment (null for pruned docs)
    for node in body["graph"]["nodes"]:
        if node["id"] in body["unclustered"]:
            assert node["cluster"] is None
        else:
            assert isinstance(node["cluster"], int)
        assert set(node) == {"id", "index", "name", "tags", "preview_url", "cluster"}


def test_cluster_by_ids_against_loaded_corpus(client):
    docs = [doc(f"d{i}", clip=[float(i), 0.0], tags=["t"]) for i in range(6)]
    assert client.post("/v1/corpus", content=corpus_file_payload(docs)).status_code == 200
    response = client.post(
        "/v1/cluster", json={"document_ids": ["d0", "d1", "d2", "d3"], "seed": 0}
    )
    assert response.status_code == 200
    assert len(response.json()["graph"]["nodes"]) == 4
    missing = client.post("/v1/cluster", json={"document_ids": ["d0", "ghost"]})
    assert missing.status_code == 400
    assert missing.json()["code"] == "UnknownId"
    duplicated = client.post("/v1/cluster", json={"document_ids": ["d0", "d0"]})
    assert duplicated.status_code == 400
    assert duplicated.json()["code"] == "DuplicateId"


def test_cluster_without_corpus_loaded(client):
    response = client.post("/v1/cluster", json={"document_ids": ["a", "b"]})
    assert response.status_code == 400
    assert response.json()["code"] == "NoCorpus"


def test_cluster_malformed_body(client):
    response = client.post(
        "/v1/cluster", content=b"{not json", headers={"content-type": "application/json"}
    )
    assert response.status_code == 400
    assert response.json()["code"] == "MalformedJson"


# --------------------------------------------------------------------- health

def test_health_empty_corpus(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "corpus_documents": 0}


def test_health_counts_loaded_docs(client):
    docs = [doc(f"d{i}", clip=[1.0]) for i in range(10)]
    client.post("/v1/corpus", content=corpus_file_payload(docs))
    assert client.get("/v1/health").json()["corpus_documents"] == 10
    # stable across repeated calls
    assert client.get("/v1/health").content == client.get("/v1/health").content


# --------------------------------------------------------------------- corpus

def test_corpus_load_returns_count(client):
    docs = [doc(f"d{i}", clip=[1.0]) for i in range(3)]
    response = client.post("/v1/corpus", content=corpus_file_payload(docs))
    assert response.status_code == 200
    assert response.json() == {"loaded": 3}


def test_corpus_duplicate_id_rejected(client):
    payload = corpus_file_payload([doc("a", clip=[1.0]), doc("b", clip=[1.0])])
    payload = payload.replace(b'"id": "b"', b'"id": "a"')
    response = client.post("/v1/corpus", content=payload)
    assert response.status_code == 400
    assert response.json()["code"] == "DuplicateId"


def test_corpus_replacement_is_whole_file(client):
    first = [doc("x", clip=[1.0])]
    second = [doc(f"y{i}", clip=[1.0]) for i in range(4)]
    client.post("/v1/corpus", content=corpus_file_payload(first))
    client.post("/v1/corpus", content=corpus_file_payload(second))
    assert client.get("/v1/health").json()["corpus_documents"] == 4


def test_startup_corpus_path(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_bytes(corpus_file_payload([doc("a", clip=[1.0]), doc("b", clip=[2.0])]))
    app = create_app(ServiceSettings(corpus_path=str(path)))
    assert TestClient(app).get("/v1/health").json()["corpus_documents"] == 2
