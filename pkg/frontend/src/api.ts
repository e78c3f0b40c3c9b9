// Thin client for the two service endpoints.

import type { AssessResponse, HealthResponse } from "./types";

export type FetchLike = (
  input: string,
  init?: RequestInit
) => Promise<Response>;

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new Error(`service error ${response.status}: ${detail}`);
  }
  return response.json() as Promise<T>;
}

export async function assessPassword(
  base: string,
  password: string,
  threshold: number,
  fetchFn: FetchLike = fetch
): Promise<AssessResponse> {
  const response = await fetchFn(`${base}/assess`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ password, threshold }),
  });
  return parseOrThrow<AssessResponse>(response);
}

export async function fetchHealth(
  base: string,
  fetchFn: FetchLike = fetch
): Promise<HealthResponse> {
  const response = await fetchFn(`${base}/health`);
  return parseOrThrow<HealthResponse>(response);
}
