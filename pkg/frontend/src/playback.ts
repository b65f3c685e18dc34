// Trace playback: the rendered state at cursor k is a pure fold of
// events[0..k), so stepping back and forward always lands on identical
// views.

import type { Certificate, TraceDocument, TraceEvent } from "./types.js";

export interface ListView {
  round: number;
  label: "merged" | "trimmed" | "filtered";
  values: number[];
  elided: number;
  dropped: number[];
}

export interface PlaybackState {
  cursor: number;
  /** vertices currently in the cover, in pick order */
  cover: number[];
  /** the edge the algorithm just picked, if any */
  pickedEdge: [number, number] | null;
  /** edges discarded so far */
  removedEdges: [number, number][];
  /** spanning-tree edges grown so far */
  mstEdges: [number, number][];
  /** preorder / tour visits in order */
  visits: number[];
  /** DFS stack for Hamiltonian search (visits minus backtracks) */
  searchStack: number[];
  /** latest value-list snapshot, for the subset-sum algorithms */
  list: ListView | null;
  /** item indices taken so far */
  takenItems: number[];
  /** one-line description of the latest event */
  description: string;
  /** certificate to display once the cursor reaches the end */
  finalCertificate: Certificate | undefined;
  truncated: boolean;
  atEnd: boolean;
}

function describe(event: TraceEvent): string {
  const p = event.payload;
  switch (event.kind) {
    case "edge-picked":
      return `picked edge (${p.u}, ${p.v})`;
    case "vertex-added-to-cover":
      return `added vertex ${p.vertex} to the cover`;
    case "edges-removed": {
      const edges = p.edges as [number, number][];
      return edges.length ? `removed ${edges.length} covered edge(s)` : "no other edges to remove";
    }
    case "mst-edge-added":
      return `tree edge (${p.u}, ${p.v}) at cost ${p.w}`;
    case "preorder-visit":
      return `visit vertex ${p.vertex}`;
    case "backtrack":
      return p.vertex !== undefined ? `backtrack from vertex ${p.vertex}` : "backtrack";
    case "list-merged":
      return `round ${p.i}: merged list has ${p.size} sums`;
    case "list-trimmed":
      return `round ${p.i}: trimmed to ${p.size} sums`;
    case "element-dropped":
      return `round ${p.i}: dropped ${p.count} sums over the target`;
    case "dp-cell-set":
      return `dynamic program progressed`;
    case "item-taken":
      return `took item ${p.index} (value ${p.value})`;
    default:
      return event.kind;
  }
}

function numbers(x: unknown): number[] {
  return Array.isArray(x) ? (x as number[]) : [];
}

/** Fold the first `cursor` events into a rendered state. */
export function playbackState(trace: TraceDocument, cursor: number): PlaybackState {
  const clamped = Math.max(0, Math.min(cursor, trace.events.length));
  const state: PlaybackState = {
    cursor: clamped,
    cover: [],
    pickedEdge: null,
    removedEdges: [],
    mstEdges: [],
    visits: [],
    searchStack: [],
    list: null,
    takenItems: [],
    description: clamped === 0 ? "pristine instance" : "",
    finalCertificate: undefined,
    truncated: trace.truncated,
    atEnd: clamped === trace.events.length,
  };

  for (let k = 0; k < clamped; k++) {
    const event = trace.events[k]!;
    const p = event.payload;
    switch (event.kind) {
      case "edge-picked":
        state.pickedEdge = [p.u as number, p.v as number];
        break;
      case "vertex-added-to-cover":
        if (!state.cover.includes(p.vertex as number)) state.cover.push(p.vertex as number);
        break;
      case "edges-removed":
        for (const edge of p.edges as [number, number][]) state.removedEdges.push(edge);
        break;
      case "mst-edge-added":
        state.mstEdges.push([p.u as number, p.v as number]);
        break;
      case "preorder-visit":
        state.visits.push(p.vertex as number);
        state.searchStack.push(p.vertex as number);
        break;
      case "backtrack":
        if (p.vertex !== undefined && state.searchStack.length) state.searchStack.pop();
        break;
      case "list-merged":
        state.list = {
          round: p.i as number,
          label: "merged",
          values: numbers(p.values),
          elided: (p.elided as number) ?? 0,
          dropped: [],
        };
        break;
      case "list-trimmed":
        state.list = {
          round: p.i as number,
          label: "trimmed",
          values: numbers(p.values),
          elided: (p.elided as number) ?? 0,
          dropped: numbers(p.dropped),
        };
        break;
      case "element-dropped":
        if (state.list) {
          state.list = { ...state.list, label: "filtered", dropped: [] };
        }
        break;
      case "item-taken":
        state.takenItems.push(p.index as number);
        break;
      default:
        break;
    }
    if (k === clamped - 1) state.description = describe(event);
  }

  if (state.atEnd) state.finalCertificate = trace.outcome.certificate;
  return state;
}

/** Byte-exact text of the certificate field for the final view. */
export function certificateText(certificate: Certificate | undefined): string {
  if (certificate === undefined) return "";
  return JSON.stringify(certificate);
}

export function clampCursor(trace: TraceDocument, cursor: number): number {
  return Math.max(0, Math.min(cursor, trace.events.length));
}
