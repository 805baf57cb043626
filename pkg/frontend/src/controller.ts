// Orchestrates the what-if loop: parameter changes collapse through a
// debouncer into one request sequence; responses are applied only when
// they belong to the newest sequence, so the display can never show a
// window computed for parameters the user has already moved past.

import type { ApiClient, ConfigBody, CriterionBody, CriterionKind, WindowBody } from "./api.js";
import { debounce, type Debounced } from "./debounce.js";
import { createRequestSequencer } from "./sequencer.js";
import type { ExplorerParams, Store } from "./state.js";

export const DEFAULT_DEBOUNCE_MS = 150;

function criterionBody(kind: CriterionKind, target: number | null): CriterionBody {
  return kind === "NTB" ? { kind, target: target ?? undefined } : { kind };
}

export function configFromParams(
  params: ExplorerParams,
  kinds: [CriterionKind, CriterionKind],
): ConfigBody {
  return {
    transparency: criterionBody(kinds[0], params.targets[0]),
    hardness: criterionBody(kinds[1], params.targets[1]),
    weights: params.weights,
  };
}

// Crosshair drags explore "hit exactly this (y1, y2)" questions.
export function crosshairConfig(target: [number, number], weights: [number, number]): ConfigBody {
  return {
    transparency: { kind: "NTB", target: target[0] },
    hardness: { kind: "NTB", target: target[1] },
    weights,
  };
}

export type ExplorerController = {
  init: () => Promise<void>;
  selectGuideline: (id: number) => void;
  setTarget: (index: 0 | 1, value: number | null) => void;
  setWeights: (weights: [number, number]) => void;
  setTolerances: (deltaX: number, deltaY: number) => void;
  moveCrosshair: (y1: number, y2: number) => void;
  flush: () => void;
  settled: () => Promise<void>;
};

export function createExplorerController(
  api: ApiClient,
  store: Store,
  debounceMs: number = DEFAULT_DEBOUNCE_MS,
): ExplorerController {
  const sequencer = createRequestSequencer();
  let inFlight: Promise<void> = Promise.resolve();

  function kinds(): [CriterionKind, CriterionKind] {
    const state = store.get();
    const row = state.guidelines.find((g) => g.id === state.params.guidelineId);
    return row ? [row.transparency, row.hardness] : ["NTB", "NTB"];
  }

  async function refresh(): Promise<void> {
    const sequence = sequencer.next();
    const params = store.get().params;
    store.update({ pending: true });
    try {
      if (params.crosshair !== null) {
        // crosshair mode: feasibility verdict plus the dual-target optimum
        const config = crosshairConfig(params.crosshair, params.weights);
        const [feasibility, solution, window] = await Promise.all([
          api.feasibility(params.crosshair, [2, 2]),
          api.optimize(config),
          api.window({ ...config, delta_x: params.deltaX, delta_y: params.deltaY }),
        ]);
        if (sequencer.isStale(sequence)) {
          return;
        }
        store.update({
          feasibility,
          solution,
          window,
          offline: false,
          error: null,
          pending: false,
        });
        return;
      }
      const config = configFromParams(params, kinds());
      const body: WindowBody = { ...config, delta_x: params.deltaX, delta_y: params.deltaY };
      const [solution, window] = await Promise.all([api.optimize(config), api.window(body)]);
      if (sequencer.isStale(sequence)) {
        return;
      }
      store.update({
        solution,
        window,
        feasibility: null,
        offline: false,
        error: null,
        pending: false,
      });
    } catch (err) {
      if (sequencer.isStale(sequence)) {
        return;
      }
      const offline = err instanceof TypeError; // fetch network failure
      store.update({
        offline,
        error: err instanceof Error ? err.message : String(err),
        solution: null,
        window: null,
        pending: false,
      });
    }
  }

  const scheduleRefresh: Debounced<[]> = debounce(() => {
    inFlight = refresh();
  }, debounceMs);

  function patchParams(patch: Partial<ExplorerParams>): void {
    store.update({ params: { ...store.get().params, ...patch } });
    scheduleRefresh();
  }

  return {
    async init() {
      const [guidelines, fps] = await Promise.all([api.guidelines(), api.fps(12)]);
      store.update({ guidelines: guidelines.guidelines, fps });
      inFlight = refresh();
      await inFlight;
    },
    selectGuideline(id) {
      patchParams({ guidelineId: id, crosshair: null });
    },
    setTarget(index, value) {
      const targets: [number | null, number | null] = [...store.get().params.targets];
      targets[index] = value;
      patchParams({ targets, crosshair: null });
    },
    setWeights(weights) {
      patchParams({ weights });
    },
    setTolerances(deltaX, deltaY) {
      patchParams({ deltaX, deltaY });
    },
    moveCrosshair(y1, y2) {
      patchParams({ crosshair: [y1, y2] });
    },
    flush() {
      scheduleRefresh.flush();
    },
    settled: () => inFlight,
  };
}
