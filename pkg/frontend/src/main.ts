// DOM wiring for the explorer. All interaction flows through the
// controller; this module only reads state and paints.

import { createApiClient } from "./api.js";
import { createExplorerController } from "./controller.js";
import { canExport, exportFileName, exportSheetText } from "./exportsheet.js";
import { crosshairView, envelopeLabels, heatCells } from "./fpsview.js";
import { createStore, type ExplorerState } from "./state.js";
import { buildTernaryScene } from "./ternary.js";

const API_BASE = (window as unknown as { ELASTOMIX_API?: string }).ELASTOMIX_API
  ?? "http://127.0.0.1:8080";

const store = createStore();
const controller = createExplorerController(createApiClient(API_BASE), store);

const $ = (id: string) => document.getElementById(id)!;

function heatColor(mean: number): string {
  const v = Math.max(0, Math.min(1, mean));
  return `rgb(${Math.round(40 + 215 * v)},60,${Math.round(255 - 215 * v)})`;
}

function renderTernary(state: ExplorerState): void {
  const svg = $("ternary");
  if (!state.fps) {
    svg.innerHTML = "<text x='20' y='40'>waiting for data…</text>";
    return;
  }
  const scene = buildTernaryScene(state.fps.points, state.window?.members ?? []);
  const size = 420;
  const pad = 24;
  const span = size - 2 * pad;
  const px = (x: number) => pad + span * x;
  const py = (y: number) => size - pad - span * y;
  const parts: string[] = [];
  const outline = scene.outline.map(([x, y]) => `${px(x)},${py(y)}`).join(" ");
  parts.push(`<polygon points="${outline}" fill="none" stroke="#444"/>`);
  for (const dot of scene.dots) {
    const highlighted = dot.rankLabel !== null;
    parts.push(
      `<circle cx="${px(dot.x).toFixed(1)}" cy="${py(dot.y).toFixed(1)}" ` +
      `r="${highlighted ? 5 : 1.2}" fill="${highlighted ? "#d6402a" : "#7c9cd6"}">` +
      `<title>${dot.tooltip}</title></circle>`,
    );
    if (dot.rankLabel) {
      parts.push(
        `<text x="${(px(dot.x) + 7).toFixed(1)}" y="${py(dot.y).toFixed(1)}" ` +
        `font-size="11" fill="#d6402a">${dot.rankLabel}</text>`,
      );
    }
  }
  svg.innerHTML = parts.join("");
}

function renderFps(state: ExplorerState): void {
  const svg = $("fps");
  if (!state.fps) {
    svg.innerHTML = "";
    return;
  }
  const fps = state.fps;
  const labels = envelopeLabels(fps);
  const size = 420;
  const pad = 30;
  const span = size - 2 * pad;
  const sx = (y1: number) => pad + (span * (y1 - labels.y1Min)) / (labels.y1Max - labels.y1Min);
  const sy = (y2: number) => size - pad - (span * (y2 - labels.y2Min)) / (labels.y2Max - labels.y2Min);
  const parts: string[] = [];
  const component = ($("component") as HTMLSelectElement).value as "x1" | "x2" | "x3";
  for (const cell of heatCells(fps, fps.component_maps[component])) {
    const x = sx(cell.y1Lo);
    const w = sx(cell.y1Hi) - x;
    const y = sy(cell.y2Hi);
    const h = sy(cell.y2Lo) - y;
    parts.push(
      `<rect x="${x.toFixed(1)}" y="${y.toFixed(1)}" width="${w.toFixed(1)}" ` +
      `height="${h.toFixed(1)}" fill="${heatColor(cell.mean)}" fill-opacity="0.85">` +
      `<title>${component}=${cell.mean.toFixed(2)} (${cell.count} designs)</title></rect>`,
    );
  }
  if (state.params.crosshair) {
    const view = crosshairView(state.params.crosshair, state.feasibility);
    const cx = sx(view.y1);
    const cy = sy(view.y2);
    const color = view.feasible ? "#1a7f37" : "#c0392b";
    parts.push(`<line x1="${cx}" y1="${pad}" x2="${cx}" y2="${size - pad}" stroke="${color}"/>`);
    parts.push(`<line x1="${pad}" y1="${cy}" x2="${size - pad}" y2="${cy}" stroke="${color}"/>`);
    if (view.nearest) {
      parts.push(
        `<circle cx="${sx(view.nearest.y1)}" cy="${sy(view.nearest.y2)}" r="6" ` +
        `fill="none" stroke="#c0392b" stroke-width="2">` +
        `<title>nearest achievable (${view.nearest.composition.join(",")})</title></circle>`,
      );
    }
  }
  parts.push(
    `<text x="${pad}" y="${size - 8}" font-size="11">` +
    `y1 ${labels.y1Min.toFixed(1)}–${labels.y1Max.toFixed(1)}, ` +
    `y2 ${labels.y2Min.toFixed(1)}–${labels.y2Max.toFixed(1)}</text>`,
  );
  svg.innerHTML = parts.join("");
}

function renderStatus(state: ExplorerState): void {
  const status = $("status");
  if (state.offline) {
    status.textContent = "server unreachable — showing no data";
    status.className = "offline";
    return;
  }
  if (state.error) {
    status.textContent = state.error;
    status.className = "error";
    return;
  }
  if (!state.window || state.window.members.length === 0) {
    status.textContent = "no feasible window for these parameters";
    status.className = "empty";
    return;
  }
  const anchor = state.window.anchor;
  status.textContent =
    `optimal (${anchor.composition.join(", ")}) D=${anchor.desirability.toFixed(4)} ` +
    `y1=${anchor.predictions.transparency.toFixed(2)} ` +
    `y2=${anchor.predictions.hardness.toFixed(2)} — ${state.window.members.length} window members`;
  status.className = state.pending ? "pending" : "ready";
}

function renderControls(state: ExplorerState): void {
  const select = $("guideline") as HTMLSelectElement;
  if (select.options.length === 0 && state.guidelines.length > 0) {
    for (const row of state.guidelines) {
      const option = document.createElement("option");
      option.value = String(row.id);
      option.textContent = `Id-${row.id}: ${row.tailors}`;
      select.appendChild(option);
    }
  }
  const exportButton = $("export") as HTMLButtonElement;
  exportButton.disabled = !canExport(state.window);
}

function render(state: ExplorerState): void {
  renderControls(state);
  renderTernary(state);
  renderFps(state);
  renderStatus(state);
}

function bindEvents(): void {
  ($("guideline") as HTMLSelectElement).addEventListener("change", (e) => {
    controller.selectGuideline(Number((e.target as HTMLSelectElement).value));
  });
  for (const [id, index] of [["t1", 0], ["t2", 1]] as const) {
    ($(id) as HTMLInputElement).addEventListener("input", (e) => {
      const raw = (e.target as HTMLInputElement).value;
      controller.setTarget(index, raw === "" ? null : Number(raw));
    });
  }
  ($("w1") as HTMLInputElement).addEventListener("input", (e) => {
    const w1 = Number((e.target as HTMLInputElement).value);
    controller.setWeights([w1, 1 - w1]);
  });
  for (const id of ["dx", "dy"]) {
    ($(id) as HTMLInputElement).addEventListener("input", () => {
      controller.setTolerances(
        Number(($("dx") as HTMLInputElement).value),
        Number(($("dy") as HTMLInputElement).value),
      );
    });
  }
  $("fps").addEventListener("pointermove", (e) => {
    if ((e as PointerEvent).buttons !== 1) {
      return;
    }
    const fps = store.get().fps;
    if (!fps) {
      return;
    }
    const rect = ($("fps") as unknown as SVGSVGElement).getBoundingClientRect();
    const size = 420;
    const pad = 30;
    const span = size - 2 * pad;
    const fx = ((e as PointerEvent).clientX - rect.left - pad) / span;
    const fy = (size - pad - ((e as PointerEvent).clientY - rect.top)) / span;
    const y1 = fps.y1_range[0] + fx * (fps.y1_range[1] - fps.y1_range[0]);
    const y2 = fps.y2_range[0] + fy * (fps.y2_range[1] - fps.y2_range[0]);
    controller.moveCrosshair(y1, y2);
  });
  ($("component") as HTMLSelectElement).addEventListener("change", () => render(store.get()));
  $("export").addEventListener("click", () => {
    const window_ = store.get().window;
    if (!window_ || !canExport(window_)) {
      return;
    }
    const blob = new Blob([exportSheetText(window_)], { type: "text/csv" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = exportFileName(window_);
    link.click();
    URL.revokeObjectURL(link.href);
  });
}

store.subscribe(render);
bindEvents();
controller.init().catch((err) => {
  store.update({ offline: true, error: String(err) });
});
