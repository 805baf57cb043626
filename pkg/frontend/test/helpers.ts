import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type {
  ApiClient,
  ConfigBody,
  FeasibilityResponse,
  FpsResponse,
  GuidelinesResponse,
  SolutionResponse,
  WindowBody,
  WindowResponse,
} from "../src/api.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixtureText(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf-8");
}

export function fixture<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

export interface RecordedCall {
  endpoint: string;
  body: unknown;
}

export interface FixtureApiOptions {
  // resolves are deferred until release() when set, to simulate slow responses
  manual?: boolean;
}

// Canned-transport ApiClient backed by the committed fixtures. Targets
// near (55, 55) answer with the feasible fixtures, anything else with the
// out-of-reach (97, 44) fixtures.
export function createFixtureApi(options: FixtureApiOptions = {}) {
  const calls: RecordedCall[] = [];
  const pending: (() => void)[] = [];

  function deliver<T>(value: T): Promise<T> {
    if (!options.manual) {
      return Promise.resolve(value);
    }
    return new Promise<T>((resolve) => {
      pending.push(() => resolve(value));
    });
  }

  function nearFeasibleTarget(target: [number, number]): boolean {
    return Math.abs(target[0] - 55) < 10 && Math.abs(target[1] - 55) < 10;
  }

  const api: ApiClient = {
    guidelines() {
      calls.push({ endpoint: "/guidelines", body: null });
      return deliver(fixture<GuidelinesResponse>("guidelines.json"));
    },
    fps(grid: number) {
      calls.push({ endpoint: "/fps", body: { grid } });
      return deliver(fixture<FpsResponse>("fps.json"));
    },
    optimize(body: ConfigBody) {
      calls.push({ endpoint: "/optimize", body });
      const target = body.transparency.target ?? 55;
      const name = target > 90 ? "optimize_97_44.json" : "optimize_55_55.json";
      return deliver(fixture<SolutionResponse>(name));
    },
    window(body: WindowBody) {
      calls.push({ endpoint: "/window", body });
      return deliver(fixture<WindowResponse>("window_sorta.json"));
    },
    feasibility(target: [number, number], tolerance: [number, number]) {
      calls.push({ endpoint: "/feasibility", body: { target, tolerance } });
      const name = nearFeasibleTarget(target)
        ? "feasibility_55_55.json"
        : "feasibility_97_44.json";
      return deliver(fixture<FeasibilityResponse>(name));
    },
  };

  return {
    api,
    calls,
    callsTo: (endpoint: string) => calls.filter((c) => c.endpoint === endpoint),
    releaseAll() {
      while (pending.length > 0) {
        pending.shift()!();
      }
    },
    releaseOne() {
      pending.shift()?.();
    },
    pendingCount: () => pending.length,
  };
}
