// Single-user session state: current document, selected algorithm, loaded
// trace, playback cursor, and the latest comparison.  All transitions are
// pure so the UI can re-render from state alone.

import { clampCursor } from "./playback.js";
import type { CompareView } from "./compare.js";
import type { InstanceDocument, TraceDocument } from "./types.js";

export interface SessionState {
  document: InstanceDocument;
  algorithm: string;
  epsilon: number | null;
  trace: TraceDocument | null;
  cursor: number;
  comparison: CompareView | null;
  editorError: string | null;
}

export function initialSession(document: InstanceDocument, algorithm: string): SessionState {
  return {
    document,
    algorithm,
    epsilon: null,
    trace: null,
    cursor: 0,
    comparison: null,
    editorError: null,
  };
}

export function withTrace(state: SessionState, trace: TraceDocument): SessionState {
  return { ...state, trace, cursor: 0 };
}

export function stepForward(state: SessionState): SessionState {
  if (!state.trace) return state;
  return { ...state, cursor: clampCursor(state.trace, state.cursor + 1) };
}

export function stepBack(state: SessionState): SessionState {
  if (!state.trace) return state;
  return { ...state, cursor: clampCursor(state.trace, state.cursor - 1) };
}

export function jumpTo(state: SessionState, cursor: number): SessionState {
  if (!state.trace) return state;
  return { ...state, cursor: clampCursor(state.trace, cursor) };
}
