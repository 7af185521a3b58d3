"""HTTP facade over the clustering pipeline.

Endpoints:

* ``POST /v1/cluster``  -- cluster a result set (ids into the loaded corpus,
  or inline documents); responds with cluster summaries plus the annotated
  graph export the explorer UI renders.
* ``GET  /v1/health``   -- liveness and corpus size.
* ``POST /v1/corpus``   -- atomically replace the loaded corpus.

Responses are serialized with a fixed JSON encoding and all pipeline inputs
are seeded, so one (request, corpus, seed) triple always produces the same
bytes. Pipeline wall time travels in the ``X-Pipeline-Ms`` header rather
than the body to keep that guarantee.

Request validation failures map to 400 with a machine-readable ``code``;
result sets larger than the configured ceiling map to 413.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Optional

from fastapi import FastAPI, Request, Response

from .corpus import Corpus, parse_corpus
from .errors import SoundsiftError
from .features import FeatureScheme
from .pipeline import ClusterJob, run_clustering

DEFAULT_MAX_RESULTS = 500
DEFAULT_DOCUMENT_CEILING = 2000


@dataclass
class ServiceSettings:
    corpus_path: Optional[str] = None
    max_results: int = DEFAULT_MAX_RESULTS
    document_ceiling: int = DEFAULT_DOCUMENT_CEILING
    default_seed: int = 0


def _json_response(payload: dict, status_code: int = 200, headers: Optional[dict] = None) -> Response:
    body = json.dumps(payload, separators=(",", ":"), allow_nan=False)
    return Response(
        content=body, status_code=status_code, media_type="application/json", headers=headers
    )


def _error(status_code: int, code: str, message: str) -> Response:
    return _json_response({"code": code, "message": message}, status_code=status_code)


class _BadRequest(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _require(condition: bool, code: str, message: str) -> None:
    if not condition:
        raise _BadRequest(code, message)


def _parse_job_request(obj: dict, settings: ServiceSettings) -> tuple[dict, ClusterJob, int]:
    _require(isinstance(obj, dict), "MalformedJson", "request body must be a JSON object")
    seed = obj.get("seed", settings.default_seed)
    _require(isinstance(seed, int) and not isinstance(seed, bool), "BadSeed", "seed must be an integer")
    max_results = obj.get("max_results", settings.max_results)
    _require(
        isinstance(max_results, int) and not isinstance(max_results, bool) and max_results >= 2,
        "BadMaxResults",
        "max_results must be an integer >= 2",
    )
    k_override = obj.get("k_override")
    if k_override is not None:
        _require(
            isinstance(k_override, int) and not isinstance(k_override, bool) and k_override >= 1,
            "BadK",
            "k_override must be a positive integer",
        )
    prune = obj.get("prune", False)
    _require(isinstance(prune, bool), "BadPrune", "prune must be a boolean")
    use_frames = obj.get("use_frames", False)
    _require(isinstance(use_frames, bool), "BadUseFrames", "use_frames must be a boolean")
    scheme_name = obj.get("scheme", FeatureScheme.HANDCRAFTED_STATS.value)
    try:
        scheme = FeatureScheme.from_name(scheme_name)
    except (ValueError, TypeError):
        raise _BadRequest("BadScheme", f"unknown feature scheme {scheme_name!r}")
    job = ClusterJob(
        scheme=scheme, seed=seed, k_override=k_override, prune=prune, use_frames=use_frames
    )
    return obj, job, max_results


def _resolve_documents(obj: dict, app_corpus: Optional[Corpus]) -> Corpus:
    has_ids = "document_ids" in obj
    has_inline = "documents" in obj
    _require(
        has_ids != has_inline,
        "BadRequest",
        "provide exactly one of 'document_ids' or 'documents'",
    )
    if has_inline:
        try:
            return parse_corpus(json.dumps({"documents": obj["documents"]}))
        except SoundsiftError as exc:
            raise _BadRequest(exc.code, exc.message)
    ids = obj["document_ids"]
    _require(
        isinstance(ids, list) and all(isinstance(i, str) for i in ids),
        "BadRequest",
        "'document_ids' must be a list of strings",
    )
    _require(app_corpus is not None, "NoCorpus", "no corpus is loaded")
    try:
        return app_corpus.subset(ids)
    except SoundsiftError as exc:  # unknown id, duplicate id in the request
        raise _BadRequest(exc.code, exc.message)


def create_app(settings: Optional[ServiceSettings] = None) -> FastAPI:
    settings = settings or ServiceSettings()
    app = FastAPI(title="soundsift", docs_url=None, redoc_url=None)
    app.state.settings = settings
    app.state.corpus = None
    if settings.corpus_path:
        with open(settings.corpus_path, "rb") as handle:
            app.state.corpus = parse_corpus(handle.read())

    @app.get("/v1/health")
    def health() -> Response:
        corpus: Optional[Corpus] = app.state.corpus
        return _json_response(
            {"status": "ok", "corpus_documents": len(corpus) if corpus else 0}
        )

    @app.post("/v1/corpus")
    async def load_corpus(request: Request) -> Response:
        body = await request.body()
        try:
            corpus = parse_corpus(body)
        except SoundsiftError as exc:
            return _error(400, exc.code, exc.message)
        app.state.corpus = corpus  # single-reference swap: readers see old or new
        return _json_response({"loaded": len(corpus)})

    @app.post("/v1/cluster")
    async def cluster(request: Request) -> Response:
        snapshot: Optional[Corpus] = app.state.corpus
        body = await request.body()
        try:
            obj = json.loads(body)
        except json.JSONDecodeError as exc:
            return _error(400, "MalformedJson", str(exc))
        try:
            obj, job, max_results = _parse_job_request(obj, settings)
            working = _resolve_documents(obj, snapshot)
        except _BadRequest as exc:
            return _error(400, exc.code, exc.message)
        if len(working) > settings.document_ceiling:
            return _error(
                413,
                "TooManyDocuments",
                f"{len(working)} documents exceed the ceiling of {settings.document_ceiling}",
            )
        if len(working) > max_results:
            working = Corpus(documents=working.documents[:max_results])
        started = time.perf_counter()
        try:
            result = run_clustering(working, job)
        except SoundsiftError as exc:  # too few nodes, missing features, ...
            return _error(400, exc.code, exc.message)
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        return _json_response(
            result.to_response(working.documents),
            headers={"X-Pipeline-Ms": f"{elapsed_ms:.3f}"},
        )

    return app
