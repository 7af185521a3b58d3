// Canned service response: 3 clusters (sizes 5/4/3) plus one pruned node.

import { ClusterJobResponse, GraphNode } from "../src/types";

function node(
  index: number,
  cluster: number | null,
  tags: string[],
  previewUrl: string | null = `https://example.org/p/${index}.mp3`,
): GraphNode {
  return {
    id: `s${index}`,
    index,
    name: `sound ${index}`,
    tags,
    preview_url: previewUrl,
    cluster,
  };
}

export const EDGES: [number, number][] = [
  // cluster 0: nodes 0-4
  [0, 1],
  [0, 2],
  [1, 2],
  [2, 3],
  [3, 4],
  [0, 4],
  // cluster 1: nodes 5-8
  [5, 6],
  [6, 7],
  [7, 8],
  [5, 8],
  // cluster 2: nodes 9-11
  [9, 10],
  [10, 11],
  [9, 11],
  // cross-cluster similarity
  [4, 5],
  // the pruned node sits between two clusters
  [12, 0],
  [12, 9],
];

export function cannedResponse(): ClusterJobResponse {
  return {
    clusters: [
      {
        id: 0,
        members: ["s0", "s1", "s2", "s3", "s4"],
        confidence: 0.75,
        labels: ["glass", "bottle", "clink"],
        pruned: false,
      },
      {
        id: 1,
        members: ["s5", "s6", "s7", "s8"],
        confidence: 0.8,
        labels: ["rain", "water"],
        pruned: false,
      },
      {
        id: 2,
        members: ["s9", "s10", "s11"],
        confidence: 0.75,
        labels: ["wind"],
        pruned: false,
      },
    ],
    unclustered: ["s12"],
    modularity: 0.41,
    seed: 0,
    graph: {
      nodes: [
        node(0, 0, ["glass", "clink"]),
        node(1, 0, ["glass", "bottle"]),
        node(2, 0, ["bottle", "clink"]),
        node(3, 0, ["glass"]),
        node(4, 0, ["glass", "bottle"], null), // no preview available
        node(5, 1, ["rain", "water"]),
        node(6, 1, ["rain"]),
        node(7, 1, ["water"]),
        node(8, 1, ["rain", "storm"]),
        node(9, 2, ["wind"]),
        node(10, 2, ["wind", "storm"]),
        node(11, 2, ["wind", "breeze"]),
        node(12, null, ["unsorted"]),
      ],
      edges: EDGES,
      k: 2,
    },
  };
}

export function adjacencyOf(index: number): number[] {
  const neighbors: number[] = [];
  for (const [a, b] of EDGES) {
    if (a === index) neighbors.push(b);
    else if (b === index) neighbors.push(a);
  }
  return neighbors.sort((x, y) => x - y);
}
