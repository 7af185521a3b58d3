"""Exception hierarchy shared across the package.

Every error raised by the library derives from SoundsiftError so callers
(CLI, HTTP service) can map failures to exit codes / status codes in one
place. Each class carries a stable machine-readable ``code``.
"""

from __future__ import annotations


class SoundsiftError(Exception):
    """Base class for all library errors."""

    code = "Error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class MalformedJson(SoundsiftError):
    code = "MalformedJson"


class DuplicateId(SoundsiftError):
    code = "DuplicateId"

    def __init__(self, doc_id: str):
        super().__init__(f"duplicate document id: {doc_id!r}")
        self.doc_id = doc_id


class DimensionMismatch(SoundsiftError):
    code = "DimensionMismatch"


class MissingFeatures(SoundsiftError):
    code = "MissingFeatures"

    def __init__(self, doc_id: str, message: str = ""):
        super().__init__(
            message or f"document {doc_id!r} has neither frame features nor a clip vector"
        )
        self.doc_id = doc_id


class UnknownId(SoundsiftError):
    code = "UnknownId"

    def __init__(self, doc_id: str):
        super().__init__(f"label refers to unknown document id: {doc_id!r}")
        self.doc_id = doc_id


class SingleClass(SoundsiftError):
    code = "SingleClass"


class EmptyFrames(SoundsiftError):
    code = "EmptyFrames"


class TooFewSamples(SoundsiftError):
    code = "TooFewSamples"


class TooFewNodes(SoundsiftError):
    code = "TooFewNodes"


class KTooLarge(SoundsiftError):
    code = "KTooLarge"


class EmptyGraph(SoundsiftError):
    code = "EmptyGraph"


class UnknownCluster(SoundsiftError):
    code = "UnknownCluster"

    def __init__(self, cluster_id: int):
        super().__init__(f"no such cluster: {cluster_id}")
        self.cluster_id = cluster_id


class TooFewClusters(SoundsiftError):
    code = "TooFewClusters"


class DegenerateClustering(SoundsiftError):
    code = "DegenerateClustering"


class ZeroWithinVariance(SoundsiftError):
    code = "ZeroWithinVariance"


class LengthMismatch(SoundsiftError):
    code = "LengthMismatch"
