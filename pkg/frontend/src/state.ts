// View state and the pure functions the renderer derives everything from.
// Keeping filter/dimming/highlight logic here makes it snapshot-testable
// without touching the DOM.

import { forceLayout, Point } from "./layout";
import { ClusterInfo, ClusterJobResponse, GraphNode } from "./types";

export interface ViewState {
  response: ClusterJobResponse;
  layoutSeed: number;
  positions: Point[];
  activeCluster: number | null;
  selectedNode: number | null;
}

export function createViewState(response: ClusterJobResponse, layoutSeed: number): ViewState {
  return {
    response,
    layoutSeed,
    positions: forceLayout(response.graph.nodes.length, response.graph.edges, layoutSeed),
    activeCluster: null,
    selectedNode: null,
  };
}

/** Facets are the non-pruned clusters, in id order. */
export function facetClusters(response: ClusterJobResponse): ClusterInfo[] {
  return response.clusters.filter((cluster) => !cluster.pruned);
}

/** Chip text: labels joined, then the member count. */
export function facetChipText(cluster: ClusterInfo): string {
  return `${cluster.labels.join(", ")} (${cluster.members.length})`;
}

/** Apply or toggle a cluster filter; unknown or pruned ids are ignored. */
export function setFacetFilter(state: ViewState, clusterId: number | null): ViewState {
  if (clusterId === null) return { ...state, activeCluster: null };
  const exists = facetClusters(state.response).some((c) => c.id === clusterId);
  if (!exists) return state;
  const next = state.activeCluster === clusterId ? null : clusterId;
  return { ...state, activeCluster: next };
}

/** Select a node by index (or clear); indices outside the graph are ignored. */
export function selectNode(state: ViewState, nodeIndex: number | null): ViewState {
  if (nodeIndex === null) return { ...state, selectedNode: null };
  if (nodeIndex < 0 || nodeIndex >= state.response.graph.nodes.length) return state;
  return { ...state, selectedNode: nodeIndex };
}

/** The result list under the current facet filter, in ranking order. */
export function visibleResults(state: ViewState): GraphNode[] {
  const nodes = state.response.graph.nodes;
  if (state.activeCluster === null) return [...nodes];
  return nodes.filter((node) => node.cluster === state.activeCluster);
}

/** Non-members of the active cluster are dimmed in the graph. */
export function isDimmed(state: ViewState, nodeIndex: number): boolean {
  if (state.activeCluster === null) return false;
  return state.response.graph.nodes[nodeIndex].cluster !== state.activeCluster;
}

/** Adjacency of one node, from the undirected edge list. */
export function neighborsOf(response: ClusterJobResponse, nodeIndex: number): number[] {
  const neighbors: number[] = [];
  for (const [a, b] of response.graph.edges) {
    if (a === nodeIndex) neighbors.push(b);
    else if (b === nodeIndex) neighbors.push(a);
  }
  return neighbors.sort((x, y) => x - y);
}

/** Indices highlighted by the current selection: exactly its adjacency list. */
export function highlightedNeighbors(state: ViewState): number[] {
  if (state.selectedNode === null) return [];
  return neighborsOf(state.response, state.selectedNode);
}

/** A compact snapshot of everything the renderer draws, for tests. */
export function renderSnapshot(state: ViewState): {
  filter: number | null;
  selected: number | null;
  visible: string[];
  dimmed: number[];
  highlighted: number[];
} {
  return {
    filter: state.activeCluster,
    selected: state.selectedNode,
    visible: visibleResults(state).map((node) => node.id),
    dimmed: state.response.graph.nodes
      .map((_, index) => index)
      .filter((index) => isDimmed(state, index)),
    highlighted: highlightedNeighbors(state),
  };
}
