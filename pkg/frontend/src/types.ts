// Wire types for the clustering service responses.

export interface ClusterInfo {
  id: number;
  members: string[];
  confidence: number;
  labels: string[];
  pruned: boolean;
}

export interface GraphNode {
  id: string;
  index: number;
  name: string;
  tags: string[];
  preview_url: string | null;
  cluster: number | null;
}

export interface GraphExport {
  nodes: GraphNode[];
  edges: [number, number][];
  k: number;
}

export interface ClusterJobResponse {
  clusters: ClusterInfo[];
  unclustered: string[];
  modularity: number;
  seed: number;
  graph: GraphExport;
}

export interface HealthResponse {
  status: string;
  corpus_documents: number;
}

/** Shape check before rendering; a malformed payload gets a banner, not a crash. */
export function validateResponse(payload: unknown): payload is ClusterJobResponse {
  if (typeof payload !== "object" || payload === null) return false;
  const obj = payload as Record<string, unknown>;
  if (!Array.isArray(obj.clusters) || !Array.isArray(obj.unclustered)) return false;
  const graph = obj.graph as Record<string, unknown> | undefined;
  if (!graph || !Array.isArray(graph.nodes) || !Array.isArray(graph.edges)) return false;
  return (graph.nodes as unknown[]).every((node) => {
    if (typeof node !== "object" || node === null) return false;
    const n = node as Record<string, unknown>;
    return typeof n.id === "string" && typeof n.index === "number";
  });
}
