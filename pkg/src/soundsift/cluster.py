"""Graph partitioning and cluster post-processing.

Communities come from greedy multilevel modularity optimization (local
moves + graph aggregation, repeated until no gain). Node visit order is
shuffled with a seeded RNG, and ties among equal-gain moves keep the
incumbent community (or take the lowest community id), so a fixed
(graph, seed) pair always yields the same partition.

Each cluster then gets a confidence score: the fraction of its incident
edges that stay inside it. Low-confidence clusters can be pruned, and
clusters are labeled with their most frequent member tags.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional

from .corpus import Corpus
from .errors import EmptyGraph, TooFewClusters, UnknownCluster
from .graph import KnnGraph

DEFAULT_NUM_LABELS = 3


@dataclass(frozen=True)
class Partition:
    """Node index -> dense cluster id (0..num_clusters-1).

    The assignment may cover a subset of a graph's nodes (after pruning);
    unassigned nodes are considered unclustered.
    """

    assignment: Mapping[int, int]

    def __post_init__(self):
        ids = set(self.assignment.values())
        if ids and ids != set(range(len(ids))):
            raise ValueError(f"cluster ids must be dense 0..{len(ids) - 1}, got {sorted(ids)}")

    @property
    def num_clusters(self) -> int:
        return len(set(self.assignment.values()))

    def members_of(self, cluster_id: int) -> list[int]:
        return sorted(i for i, c in self.assignment.items() if c == cluster_id)

    def sizes(self) -> list[int]:
        counts = Counter(self.assignment.values())
        return [counts[c] for c in range(self.num_clusters)]


@dataclass(frozen=True)
class ClusterSummary:
    """One presentable cluster: members, confidence, facet labels."""

    cluster_id: int
    members: tuple[str, ...]
    size: int
    confidence: float
    labels: tuple[str, ...]
    pruned: bool = False


@dataclass(frozen=True)
class PruneResult:
    """Outcome of discarding one cluster."""

    partition: Partition
    pruned_cluster: int
    pruned_members: tuple[int, ...]
    id_map: dict[int, int]


def modularity(graph: KnnGraph, partition: Partition) -> float:
    """Q = sum_c (e_c/m - (d_c/2m)^2) over clusters, for an unweighted graph."""
    m = graph.num_edges
    if m == 0:
        raise EmptyGraph("modularity is undefined for a graph with no edges")
    for node in range(graph.num_nodes):
        if node not in partition.assignment:
            raise ValueError(f"partition does not cover node {node}")
    intra: Counter[int] = Counter()
    degree: Counter[int] = Counter()
    for a, b in graph.edges:
        ca = partition.assignment[a]
        cb = partition.assignment[b]
        degree[ca] += 1
        degree[cb] += 1
        if ca == cb:
            intra[ca] += 1
    return sum(
        intra[c] / m - (degree[c] / (2.0 * m)) ** 2 for c in range(partition.num_clusters)
    )


def _one_level(
    adj: list[dict[int, float]],
    loops: list[float],
    m: float,
    rng: random.Random,
) -> tuple[list[int], bool]:
    """Local-move phase: greedily reassign nodes until no move gains modularity."""
    n = len(adj)
    k = [2.0 * loops[i] + sum(adj[i].values()) for i in range(n)]
    community = list(range(n))
    tot = k[:]
    order = list(range(n))
    rng.shuffle(order)

    improved = False
    while True:
        moved = False
        for i in order:
            current = community[i]
            links: dict[int, float] = {}
            for j, w in adj[i].items():
                c = community[j]
                links[c] = links.get(c, 0.0) + w
            tot[current] -= k[i]
            # Gain of (re)joining community c, with i detached. Candidates are
            # visited in ascending id with a strict comparison, so ties keep
            # the incumbent and otherwise pick the lowest id.
            best = current
            best_gain = links.get(current, 0.0) / m - tot[current] * k[i] / (2.0 * m * m)
            for c in sorted(links):
                if c == current:
                    continue
                gain = links[c] / m - tot[c] * k[i] / (2.0 * m * m)
                if gain > best_gain:
                    best_gain = gain
                    best = c
            community[i] = best
            tot[best] += k[i]
            if best != current:
                moved = True
                improved = True
        if not moved:
            return community, improved


def _aggregate(
    adj: list[dict[int, float]],
    loops: list[float],
    community: list[int],
) -> tuple[list[dict[int, float]], list[float], dict[int, int]]:
    """Collapse communities into super-nodes; intra weight becomes self-loops."""
    dense: dict[int, int] = {}
    for i in range(len(adj)):
        dense.setdefault(community[i], len(dense))
    new_adj: list[dict[int, float]] = [{} for _ in range(len(dense))]
    new_loops = [0.0] * len(dense)
    for i in range(len(adj)):
        ci = dense[community[i]]
        new_loops[ci] += loops[i]
        for j, w in adj[i].items():
            cj = dense[community[j]]
            if ci == cj:
                if i < j:  # each undirected edge appears in both directions
                    new_loops[ci] += w
            else:
                new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + w
    return new_adj, new_loops, dense


def _louvain(graph: KnnGraph, seed: int) -> tuple[dict[int, int], list[float]]:
    rng = random.Random(seed)
    n = graph.num_nodes
    m = float(graph.num_edges)
    adj: list[dict[int, float]] = [{} for _ in range(n)]
    for a, b in graph.edges:
        adj[a][b] = adj[a].get(b, 0.0) + 1.0
        adj[b][a] = adj[b].get(a, 0.0) + 1.0
    loops = [0.0] * n

    # flat[s] = original nodes inside super-node s of the current level
    flat: list[list[int]] = [[i] for i in range(n)]
    level_q: list[float] = []
    while True:
        community, improved = _one_level(adj, loops, m, rng)
        if not improved:
            break
        adj, loops, dense = _aggregate(adj, loops, community)
        new_flat: list[list[int]] = [[] for _ in range(len(loops))]
        for super_node, members in enumerate(flat):
            new_flat[dense[community[super_node]]].extend(members)
        flat = new_flat
        level_q.append(modularity(graph, _flat_partition(flat, n)))
        if len(flat) == 1:
            break

    assignment = _flat_partition(flat, n).assignment
    return dict(assignment), level_q


def _flat_partition(flat: list[list[int]], n: int) -> Partition:
    raw = {}
    for group_id, members in enumerate(flat):
        for node in members:
            raw[node] = group_id
    # densify by first appearance in node-index order
    dense: dict[int, int] = {}
    assignment = {}
    for node in range(n):
        dense.setdefault(raw[node], len(dense))
        assignment[node] = dense[raw[node]]
    return Partition(assignment=assignment)


# Graphs this small are enumerated exactly on top of the greedy result:
# single-node greedy moves provably get stuck on a few percent of tiny random
# graphs (a pair of nodes straddling the optimal cut re-attracts itself), and
# checking every partition costs milliseconds here.
_EXACT_ENUMERATION_MAX_NODES = 10


def _exact_max_modularity(graph: KnnGraph) -> tuple[dict[int, int], float]:
    """Exhaustive modularity maximum via canonical set-partition enumeration.

    Blocks are tried in ascending id with "new block" last, and only strict
    improvements are kept, so the returned assignment is deterministic and
    densely numbered by first appearance.
    """
    n = graph.num_nodes
    m = float(graph.num_edges)
    neighbors = [graph.neighbors(i) for i in range(n)]
    degree = [graph.degree(i) for i in range(n)]
    block_of = [-1] * n
    block_intra: list[int] = []
    block_degree: list[int] = []
    best_q = -1.0
    best: list[int] = []

    def block_delta(b: int, links: int, k: int) -> float:
        e, d = block_intra[b], block_degree[b]
        return ((e + links) / m - ((d + k) / (2 * m)) ** 2) - (e / m - (d / (2 * m)) ** 2)

    def recurse(v: int, q: float) -> None:
        nonlocal best_q, best
        if v == n:
            if q > best_q:
                best_q = q
                best = block_of[:]
            return
        links = Counter()
        for u in neighbors[v]:
            if block_of[u] >= 0:
                links[block_of[u]] += 1
        k = degree[v]
        for b in range(len(block_intra)):
            delta = block_delta(b, links.get(b, 0), k)
            block_of[v] = b
            block_intra[b] += links.get(b, 0)
            block_degree[b] += k
            recurse(v + 1, q + delta)
            block_intra[b] -= links.get(b, 0)
            block_degree[b] -= k
        new_delta = -((k / (2 * m)) ** 2)
        block_of[v] = len(block_intra)
        block_intra.append(0)
        block_degree.append(k)
        recurse(v + 1, q + new_delta)
        block_intra.pop()
        block_degree.pop()
        block_of[v] = -1

    recurse(0, 0.0)
    return {i: c for i, c in enumerate(best)}, best_q


def detect_communities(graph: KnnGraph, seed: int = 0) -> Partition:
    """Partition the graph by seeded multilevel modularity optimization.

    Tiny graphs additionally get an exhaustive check and keep whichever
    partition scores higher. The result never scores below the trivial
    single-cluster partition (whose modularity is exactly 0).
    """
    if graph.num_nodes == 0 or graph.num_edges == 0:
        raise EmptyGraph("community detection needs a graph with at least one edge")
    assignment, _ = _louvain(graph, seed)
    partition = Partition(assignment=assignment)
    q = modularity(graph, partition)
    if graph.num_nodes <= _EXACT_ENUMERATION_MAX_NODES:
        exact_assignment, exact_q = _exact_max_modularity(graph)
        if exact_q > q + 1e-12:
            partition = Partition(assignment=exact_assignment)
            q = exact_q
    if q < 0.0:
        partition = Partition(assignment={i: 0 for i in range(graph.num_nodes)})
    return partition


def community_trace(graph: KnnGraph, seed: int = 0) -> list[float]:
    """Modularity after each aggregation level (non-decreasing)."""
    if graph.num_nodes == 0 or graph.num_edges == 0:
        raise EmptyGraph("community detection needs a graph with at least one edge")
    _, level_q = _louvain(graph, seed)
    return level_q


def cluster_confidence(graph: KnnGraph, partition: Partition, cluster_id: int) -> float:
    """intra / (intra + inter) incident edges; 1.0 for an edge-free cluster."""
    if cluster_id not in range(partition.num_clusters):
        raise UnknownCluster(cluster_id)
    intra = 0
    inter = 0
    for a, b in graph.edges:
        ca = partition.assignment.get(a)
        cb = partition.assignment.get(b)
        if ca == cluster_id and cb == cluster_id:
            intra += 1
        elif ca == cluster_id or cb == cluster_id:
            inter += 1
    if intra + inter == 0:
        return 1.0
    return intra / (intra + inter)


def all_confidences(graph: KnnGraph, partition: Partition) -> list[float]:
    """Confidence of every cluster in one edge pass."""
    intra = [0] * partition.num_clusters
    incident = [0] * partition.num_clusters
    for a, b in graph.edges:
        ca = partition.assignment.get(a)
        cb = partition.assignment.get(b)
        if ca == cb and ca is not None:
            intra[ca] += 1
            incident[ca] += 1
        else:
            if ca is not None:
                incident[ca] += 1
            if cb is not None:
                incident[cb] += 1
    return [
        intra[c] / incident[c] if incident[c] else 1.0 for c in range(partition.num_clusters)
    ]


def _reduced_partition(partition: Partition, dropped: set[int]) -> tuple[Partition, dict[int, int]]:
    survivors = {i: c for i, c in partition.assignment.items() if c not in dropped}
    id_map = {}
    for old in range(partition.num_clusters):
        if old not in dropped:
            id_map[old] = len(id_map)
    return Partition(assignment={i: id_map[c] for i, c in survivors.items()}), id_map


def prune_lowest(graph: KnnGraph, partition: Partition) -> PruneResult:
    """Discard the single cluster with minimal confidence.

    Ties break by smaller size, then lower cluster id. The returned
    partition drops the pruned members; recompute confidences against
    ``graph.subgraph_without(pruned_members)`` to honor the reduced
    working graph.
    """
    if partition.num_clusters < 2:
        raise TooFewClusters("pruning needs at least 2 clusters")
    confidences = all_confidences(graph, partition)
    sizes = partition.sizes()
    pruned = min(
        range(partition.num_clusters), key=lambda c: (confidences[c], sizes[c], c)
    )
    members = tuple(partition.members_of(pruned))
    reduced, id_map = _reduced_partition(partition, {pruned})
    return PruneResult(
        partition=reduced, pruned_cluster=pruned, pruned_members=members, id_map=id_map
    )


def prune_below(graph: KnnGraph, partition: Partition, threshold: float) -> PruneResult:
    """Discard every cluster with confidence strictly below ``threshold``.

    The best cluster always survives, even below the threshold. Plumbing
    beyond the one-cluster rule used by the evaluation path.
    """
    confidences = all_confidences(graph, partition)
    dropped = {c for c, conf in enumerate(confidences) if conf < threshold}
    if len(dropped) == partition.num_clusters:
        sizes = partition.sizes()
        keep = max(range(partition.num_clusters), key=lambda c: (confidences[c], sizes[c], -c))
        dropped.discard(keep)
    members = tuple(
        sorted(i for i, c in partition.assignment.items() if c in dropped)
    )
    reduced, id_map = _reduced_partition(partition, dropped)
    first_dropped = min(dropped) if dropped else -1
    return PruneResult(
        partition=reduced, pruned_cluster=first_dropped, pruned_members=members, id_map=id_map
    )


def label_clusters(
    partition: Partition,
    corpus: Corpus,
    n_labels: int = DEFAULT_NUM_LABELS,
) -> dict[int, list[str]]:
    """Most frequent tags per cluster, by within-cluster document frequency.

    Ties prefer the tag that is rarer corpus-wide (more distinctive), then
    lexicographic order. Node index i refers to corpus.documents[i].
    """
    if n_labels < 1:
        raise ValueError("n_labels must be >= 1")
    corpus_freq: Counter[str] = Counter()
    for doc in corpus.documents:
        corpus_freq.update(set(doc.tags))

    per_cluster: dict[int, Counter[str]] = {c: Counter() for c in range(partition.num_clusters)}
    for node, cluster_id in partition.assignment.items():
        per_cluster[cluster_id].update(set(corpus.documents[node].tags))

    labels: dict[int, list[str]] = {}
    for cluster_id, counts in per_cluster.items():
        ranked = sorted(counts, key=lambda tag: (-counts[tag], corpus_freq[tag], tag))
        labels[cluster_id] = ranked[:n_labels]
    return labels
