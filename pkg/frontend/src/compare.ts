// Comparison panel view-model: approximate vs optimal with the proven
// bound and a within-bound badge.  Cap refusals and server errors are
// shown verbatim.

import { ApiError } from "./api.js";
import type { RatioDocument } from "./types.js";

export interface CompareView {
  kind: "ratio" | "message";
  lines: [string, string][];
  badge: string | null;
  message: string | null;
}

function formatBound(bound: number): string {
  return Number.isInteger(bound) ? String(bound) : bound.toFixed(6);
}

export function ratioView(doc: RatioDocument): CompareView {
  return {
    kind: "ratio",
    lines: [
      ["approx", String(doc.approx)],
      ["exact", String(doc.exact)],
      ["ratio", doc.ratio.toFixed(6)],
      ["bound", formatBound(doc.bound)],
    ],
    badge: doc.within_bound ? `within ${formatBound(doc.bound)}×` : "BOUND VIOLATED",
    message: null,
  };
}

export function errorView(err: unknown): CompareView {
  const message =
    err instanceof ApiError
      ? err.message
      : err instanceof Error
        ? err.message
        : String(err);
  return { kind: "message", lines: [], badge: null, message };
}
