// Mirrors of the service's JSON schema. Every number shown in the UI comes
// from one of these responses; nothing is computed client-side.

export type StrengthLabel = "weak_similar" | "weak_policy" | "acceptable";

export interface AssessResponse {
  label: StrengthLabel;
  max_similarity: number;
  nearest_weak: string | null;
  nearest_source: string | null;
  violations: string[];
  threshold: number;
}

export interface HealthResponse {
  status: string;
  weak_list_sizes: number[];
  threshold: number;
}

export interface UiState {
  input: string;
  threshold: number;
  verdict: AssessResponse | null;
  pending: boolean;
  error: string | null;
  revealNearest: boolean;
}
