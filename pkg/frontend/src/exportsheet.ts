// Window-sheet export. The server ships the exact text the CLI writes in
// the response's export_csv field; saving it verbatim keeps the download
// byte-identical to the CLI artifact.

import type { WindowResponse } from "./api.js";

export function canExport(window: WindowResponse | null): boolean {
  return window !== null && window.members.length > 0;
}

export function exportSheetText(window: WindowResponse): string {
  if (!canExport(window)) {
    throw new Error("window is empty; nothing to export");
  }
  return window.export_csv;
}

export function exportFileName(window: WindowResponse): string {
  const [x1, x2, x3] = window.anchor.composition;
  return `window_${x1}-${x2}-${x3}.csv`;
}
