// Feasible-property-space view data: heatmap cells from the server's
// binned component maps, the property envelope, and crosshair styling.

import type { ComponentMapGrid, FeasibilityResponse, FpsResponse } from "./api.js";

export interface HeatCell {
  y1Lo: number;
  y1Hi: number;
  y2Lo: number;
  y2Hi: number;
  mean: number; // component fraction in [0, 1]
  count: number;
}

export function heatCells(fps: FpsResponse, grid: ComponentMapGrid): HeatCell[] {
  const cells: HeatCell[] = [];
  const e1 = fps.grid_edges.y1;
  const e2 = fps.grid_edges.y2;
  for (let i = 0; i < grid.mean.length; i++) {
    for (let j = 0; j < grid.mean[i].length; j++) {
      const mean = grid.mean[i][j];
      if (mean === null) {
        continue; // empty cells stay blank
      }
      cells.push({
        y1Lo: e1[i],
        y1Hi: e1[i + 1],
        y2Lo: e2[j],
        y2Hi: e2[j + 1],
        mean,
        count: grid.count[i][j],
      });
    }
  }
  return cells;
}

export interface CrosshairView {
  y1: number;
  y2: number;
  feasible: boolean;
  // populated when the target is out of reach: the closest achievable point
  nearest: { y1: number; y2: number; composition: [number, number, number] } | null;
}

export function crosshairView(
  target: [number, number],
  feasibility: FeasibilityResponse | null,
): CrosshairView {
  if (feasibility === null) {
    return { y1: target[0], y2: target[1], feasible: true, nearest: null };
  }
  return {
    y1: target[0],
    y2: target[1],
    feasible: feasibility.feasible,
    nearest: feasibility.feasible
      ? null
      : {
          y1: feasibility.nearest.y1,
          y2: feasibility.nearest.y2,
          composition: feasibility.nearest.composition,
        },
  };
}

export function envelopeLabels(fps: FpsResponse): {
  y1Min: number;
  y1Max: number;
  y2Min: number;
  y2Max: number;
} {
  return {
    y1Min: fps.y1_range[0],
    y1Max: fps.y1_range[1],
    y2Min: fps.y2_range[0],
    y2Max: fps.y2_range[1],
  };
}
