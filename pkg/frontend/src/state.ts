// Explorer state: one plain object updated through the store so views can
// re-render on change. The rendered window always corresponds to the
// currently displayed parameters: responses are applied in request order
// (see controller.ts) and stale ones are dropped.

import type {
  FeasibilityResponse,
  FpsResponse,
  GuidelineRow,
  SolutionResponse,
  WindowResponse,
} from "./api.js";

export interface ExplorerParams {
  guidelineId: number;
  targets: [number | null, number | null]; // transparency, hardness
  weights: [number, number];
  deltaX: number;
  deltaY: number;
  crosshair: [number, number] | null; // target in (y1, y2) space
}

export interface ExplorerState {
  params: ExplorerParams;
  guidelines: GuidelineRow[];
  fps: FpsResponse | null;
  solution: SolutionResponse | null;
  window: WindowResponse | null;
  feasibility: FeasibilityResponse | null;
  offline: boolean;
  error: string | null;
  pending: boolean;
}

export function initialState(): ExplorerState {
  return {
    params: {
      guidelineId: 1,
      targets: [55, 55],
      weights: [0.5, 0.5],
      deltaX: 3,
      deltaY: 3,
      crosshair: null,
    },
    guidelines: [],
    fps: null,
    solution: null,
    window: null,
    feasibility: null,
    offline: false,
    error: null,
    pending: false,
  };
}

export type Listener = (state: ExplorerState) => void;

export type Store = {
  get: () => ExplorerState;
  update: (patch: Partial<ExplorerState>) => void;
  subscribe: (listener: Listener) => () => void;
};

export function createStore(state: ExplorerState = initialState()): Store {
  const listeners = new Set<Listener>();

  return {
    get: () => state,
    update(patch) {
      state = { ...state, ...patch };
      for (const listener of listeners) {
        listener(state);
      }
    },
    subscribe(listener) {
      listeners.add(listener);
      return () => listeners.delete(listener);
    },
  };
}
