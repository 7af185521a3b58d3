// Fixed cluster palette; pruned/unclustered nodes render neutral gray.

export const CLUSTER_PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#59a14f",
  "#e15759",
  "#b07aa1",
  "#edc948",
  "#76b7b2",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
] as const;

export const NEUTRAL_COLOR = "#9e9e9e";

export function clusterColor(clusterId: number | null): string {
  if (clusterId === null) return NEUTRAL_COLOR;
  return CLUSTER_PALETTE[clusterId % CLUSTER_PALETTE.length];
}
