"""Figure rendering for reports and clustered graphs.

Every rendering call writes a PNG next to the JSON/CSV outputs. Layouts
and colors are seeded, so re-running a command reproduces the same image.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .evaluate import EvalReport
from .pipeline import ClusterJobResult

NODE_PALETTE = plt.cm.tab10.colors
NEUTRAL = (0.62, 0.62, 0.62)


def render_report_figure(report: EvalReport, path: str | Path) -> Path:
    """Bar chart of per-run scores with the mean drawn as a horizontal line."""
    path = Path(path)
    scored = [(r.run_id, r.score) for r in report.runs if not r.skipped and r.score is not None]
    fig, ax = plt.subplots(figsize=(max(6.0, 0.5 * max(len(scored), 1)), 4.0))
    if scored:
        names = [name for name, _ in scored]
        values = [value for _, value in scored]
        ax.bar(range(len(values)), values, color="#4878a8")
        ax.set_xticks(range(len(names)))
        ax.set_xticklabels(names, rotation=60, ha="right", fontsize=8)
        if report.mean is not None:
            ax.axhline(report.mean, color="#b04030", linestyle="--", linewidth=1.2,
                       label=f"mean = {report.mean:.3f}")
            ax.legend(loc="best", fontsize=8)
    else:
        ax.text(0.5, 0.5, "no scored runs", ha="center", va="center", transform=ax.transAxes)
    variant = "pruning" if report.pruning else "no pruning"
    ax.set_ylabel(report.metric)
    ax.set_title(f"{report.metric} per run ({variant})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def _spring_layout(
    edges: Sequence[tuple[int, int]], n: int, seed: int, iterations: int = 60
) -> np.ndarray:
    """Small deterministic force-directed layout (Fruchterman-Reingold style)."""
    rng = np.random.default_rng(seed)
    pos = rng.uniform(-1.0, 1.0, size=(n, 2))
    if n <= 1:
        return pos
    k = np.sqrt(4.0 / n)
    temperature = 0.2
    edge_idx = np.array(edges) if edges else np.zeros((0, 2), dtype=int)
    for _ in range(iterations):
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.linalg.norm(delta, axis=2)
        np.fill_diagonal(dist, 1.0)
        repulse = (k * k / dist**2)[:, :, None] * delta
        force = repulse.sum(axis=1)
        for a, b in edge_idx:
            d = pos[a] - pos[b]
            norm = np.linalg.norm(d)
            if norm > 0:
                pull = (norm / k) * (d / norm)
                force[a] -= pull
                force[b] += pull
        lengths = np.linalg.norm(force, axis=1)
        lengths[lengths == 0] = 1.0
        pos += (force / lengths[:, None]) * min(temperature, 1.0)
        temperature *= 0.95
    return pos


def render_graph_figure(result: ClusterJobResult, path: str | Path, seed: int = 0) -> Path:
    """2D view of the clustered graph; pruned/unclustered nodes in gray."""
    path = Path(path)
    n = result.graph.num_nodes
    edges = sorted(result.graph.edges)
    pos = _spring_layout(edges, n, seed)

    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    for a, b in edges:
        ax.plot(
            [pos[a, 0], pos[b, 0]], [pos[a, 1], pos[b, 1]],
            color="#cccccc", linewidth=0.6, zorder=1,
        )
    colors = []
    for i in range(n):
        cluster_id = result.node_cluster(i)
        if cluster_id is None:
            colors.append(NEUTRAL)
        else:
            colors.append(NODE_PALETTE[cluster_id % len(NODE_PALETTE)])
    ax.scatter(pos[:, 0], pos[:, 1], c=colors, s=42, zorder=2, edgecolors="white",
               linewidths=0.5)
    ax.set_axis_off()
    ax.set_title(f"{n} sounds, {len(result.summaries)} clusters, Q={result.modularity:.3f}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
