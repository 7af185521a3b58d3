// Thin client for the clustering service.

import { ClusterJobResponse, HealthResponse } from "./types";

export interface ClusterRequest {
  documents?: unknown[];
  document_ids?: string[];
  seed?: number;
  k_override?: number;
  prune?: boolean;
  scheme?: string;
  max_results?: number;
}

export async function getHealth(baseUrl = ""): Promise<HealthResponse> {
  const response = await fetch(`${baseUrl}/v1/health`);
  if (!response.ok) throw new Error(`health check failed: ${response.status}`);
  return (await response.json()) as HealthResponse;
}

export async function postCluster(
  request: ClusterRequest,
  baseUrl = "",
): Promise<ClusterJobResponse> {
  const response = await fetch(`${baseUrl}/v1/cluster`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(request),
  });
  if (!response.ok) {
    let detail = `${response.status}`;
    try {
      const body = (await response.json()) as { code?: string; message?: string };
      detail = body.code ? `${body.code}: ${body.message ?? ""}` : detail;
    } catch {
      // keep the status code
    }
    throw new Error(`clustering request failed (${detail})`);
  }
  return (await response.json()) as ClusterJobResponse;
}
