"""Exact nearest-neighbor search and k-NN graph construction.

The graph connects every item to its k nearest neighbors under Euclidean
distance, then symmetrizes by union: an undirected edge exists when either
endpoint lists the other. k defaults to floor(log2(N)), so neighborhoods
stay rich on small result sets and bounded on large ones.

Search is exact brute force, O(n^2 d) for the full graph; result sets are
capped upstream, so exactness is worth more than an index here. A swappable
backend hook is left for approximate methods.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import DimensionMismatch, KTooLarge, TooFewNodes

# Extension point: a backend maps (vectors, k) to per-row neighbor index lists
# (self excluded). The default is exact search; approximate indexes can slot in.
NeighborBackend = Callable[[np.ndarray, int], list[list[int]]]


def default_k(n: int) -> int:
    """Neighborhood size rule: max(1, floor(log2 n))."""
    if n < 2:
        raise TooFewNodes("need at least 2 nodes to choose k")
    return max(1, n.bit_length() - 1)


@dataclass(frozen=True)
class GraphConfig:
    """Construction knobs; distance is Euclidean in v1."""

    k_override: Optional[int] = None

    def resolve_k(self, n: int) -> int:
        if self.k_override is not None:
            if self.k_override < 1:
                raise ValueError("k_override must be >= 1")
            return min(self.k_override, n - 1)
        return default_k(n)


@dataclass(frozen=True)
class KnnGraph:
    """Undirected unweighted similarity graph over documents.

    Node index i corresponds to ``ids[i]``; edges are (i, j) pairs with i < j.
    """

    ids: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    k_used: int
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, default=())

    @property
    def num_nodes(self) -> int:
        return len(self.ids)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def neighbors(self, node: int) -> tuple[int, ...]:
        return self.adjacency[node]

    def subgraph_without(self, removed: set[int]) -> "KnnGraph":
        """Same node index space with ``removed`` nodes isolated (their edges
        dropped). Keeps indices stable for partitions referring to this graph."""
        kept_edges = frozenset(
            (a, b) for a, b in self.edges if a not in removed and b not in removed
        )
        return KnnGraph(
            ids=self.ids,
            edges=kept_edges,
            k_used=self.k_used,
            adjacency=_adjacency_from_edges(len(self.ids), kept_edges),
        )

    def export(self) -> dict:
        return {
            "nodes": [{"id": doc_id, "index": i} for i, doc_id in enumerate(self.ids)],
            "edges": [list(edge) for edge in sorted(self.edges)],
            "k": self.k_used,
        }


def _adjacency_from_edges(
    n: int, edges: frozenset[tuple[int, int]]
) -> tuple[tuple[int, ...], ...]:
    neighbor_sets: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        neighbor_sets[a].append(b)
        neighbor_sets[b].append(a)
    return tuple(tuple(sorted(ns)) for ns in neighbor_sets)


def knn_search(
    query: np.ndarray,
    store: np.ndarray,
    k: int,
    exclude_index: Optional[int] = None,
) -> list[tuple[int, float]]:
    """The k rows of ``store`` closest to ``query`` in Euclidean distance.

    Sorted by ascending distance, ties broken by ascending row index.
    ``exclude_index`` drops one row first (the query's own row, when the
    query comes from the store).
    """
    store = np.asarray(store, dtype=float)
    query = np.asarray(query, dtype=float)
    if store.ndim != 2 or query.shape != (store.shape[1],):
        raise DimensionMismatch(
            f"query has shape {query.shape}, store rows have {store.shape[1:]}"
        )
    if k < 1:
        raise ValueError("k must be >= 1")
    candidates = store.shape[0] - (1 if exclude_index is not None else 0)
    if k > candidates:
        raise KTooLarge(f"k={k} exceeds the {candidates} available rows")
    sq_dist = np.sum((store - query) ** 2, axis=1)
    order = np.argsort(sq_dist, kind="stable")  # stable argsort = tie-break by index
    out: list[tuple[int, float]] = []
    for idx in order:
        if exclude_index is not None and idx == exclude_index:
            continue
        out.append((int(idx), float(np.sqrt(sq_dist[idx]))))
        if len(out) == k:
            break
    return out


def _exact_neighbor_lists(vectors: np.ndarray, k: int) -> list[list[int]]:
    # Direct differences, not the expanded-norm trick: equal points must give
    # bit-equal distances so the stable sort's index tie-break is honored.
    n = vectors.shape[0]
    lists: list[list[int]] = []
    for i in range(n):
        sq_dist = np.sum((vectors - vectors[i]) ** 2, axis=1)
        sq_dist[i] = np.inf
        order = np.argsort(sq_dist, kind="stable")
        lists.append([int(j) for j in order[:k]])
    return lists


def build_knn_graph(
    vectors: np.ndarray,
    config: GraphConfig = GraphConfig(),
    ids: Optional[Sequence[str]] = None,
    backend: NeighborBackend = _exact_neighbor_lists,
) -> KnnGraph:
    """Directed k-NN lists per node (self excluded), symmetrized by union."""
    vectors = np.asarray(vectors, dtype=float)
    if vectors.ndim != 2 or vectors.shape[0] < 2:
        raise TooFewNodes("graph construction needs at least 2 vectors")
    n = vectors.shape[0]
    if ids is None:
        ids = [str(i) for i in range(n)]
    elif len(ids) != n:
        raise DimensionMismatch(f"{len(ids)} ids for {n} vectors")
    k = config.resolve_k(n)

    edges: set[tuple[int, int]] = set()
    for i, neighbor_list in enumerate(backend(vectors, k)):
        for j in neighbor_list:
            edges.add((i, j) if i < j else (j, i))
    frozen = frozenset(edges)
    return KnnGraph(
        ids=tuple(ids),
        edges=frozen,
        k_used=k,
        adjacency=_adjacency_from_edges(n, frozen),
    )
