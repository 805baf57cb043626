// Typed client for the elastomix API. All numbers shown anywhere in the
// explorer come from these responses; the client performs no model math.

export type CriterionKind = "NTB" | "LTB" | "STB";

export interface CriterionBody {
  kind: CriterionKind;
  target?: number;
  lower?: number;
  upper?: number;
  exponent?: number;
}

export interface ConfigBody {
  transparency: CriterionBody;
  hardness: CriterionBody;
  weights: [number, number];
}

export interface WindowBody extends ConfigBody {
  delta_x: number;
  delta_y: number;
}

export interface Predictions {
  transparency: number;
  hardness: number;
}

export interface SolutionResponse {
  composition: [number, number, number];
  continuous_point: [number, number, number];
  desirability: number;
  predictions: Predictions;
  provenance: Record<string, string>;
}

export interface WindowMember {
  rank: number;
  label: string;
  composition: [number, number, number];
  desirability: number;
  predictions: Predictions;
}

export interface WindowResponse {
  anchor: SolutionResponse;
  members: WindowMember[];
  export_csv: string;
}

export interface FpsPoint {
  x1: number;
  x2: number;
  x3: number;
  y1: number;
  y2: number;
}

export interface ComponentMapGrid {
  mean: (number | null)[][];
  count: number[][];
}

export interface FpsResponse {
  points: FpsPoint[];
  y1_range: [number, number];
  y2_range: [number, number];
  grid_edges: { y1: number[]; y2: number[] };
  component_maps: { x1: ComponentMapGrid; x2: ComponentMapGrid; x3: ComponentMapGrid };
}

export interface FeasibilityResponse {
  feasible: boolean;
  distance: number;
  nearest: { composition: [number, number, number]; y1: number; y2: number };
}

export interface GuidelineRow {
  id: number;
  transparency: CriterionKind;
  hardness: CriterionKind;
  tailors: string;
  application: string;
}

export interface GuidelinesResponse {
  guidelines: GuidelineRow[];
}

export interface ApiError {
  error: { code: string; message: string; field: string | null };
}

// The surface the controller depends on; tests substitute a canned one.
export interface ApiClient {
  guidelines(): Promise<GuidelinesResponse>;
  fps(grid: number): Promise<FpsResponse>;
  optimize(body: ConfigBody): Promise<SolutionResponse>;
  window(body: WindowBody): Promise<WindowResponse>;
  feasibility(target: [number, number], tolerance: [number, number]): Promise<FeasibilityResponse>;
}

export class ApiRequestError extends Error {
  readonly code: string;
  readonly field: string | null;

  constructor(code: string, message: string, field: string | null) {
    super(message);
    this.code = code;
    this.field = field;
  }
}

export function createApiClient(baseUrl: string): ApiClient {
  async function request<T>(path: string, body?: unknown): Promise<T> {
    const response = await fetch(baseUrl + path, {
      method: body === undefined ? "GET" : "POST",
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let code = `http_${response.status}`;
      let message = response.statusText;
      let field: string | null = null;
      try {
        const payload = (await response.json()) as ApiError;
        code = payload.error.code;
        message = payload.error.message;
        field = payload.error.field;
      } catch {
        // non-JSON error body; keep the HTTP status
      }
      throw new ApiRequestError(code, message, field);
    }
    return (await response.json()) as T;
  }

  return {
    guidelines: () => request<GuidelinesResponse>("/guidelines"),
    fps: (grid) => request<FpsResponse>(`/fps?grid=${grid}`),
    optimize: (body) => request<SolutionResponse>("/optimize", body),
    window: (body) => request<WindowResponse>("/window", body),
    feasibility: (target, tolerance) =>
      request<FeasibilityResponse>("/feasibility", { target, tolerance }),
  };
}
