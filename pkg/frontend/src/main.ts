// DOM wiring.  All logic lives in the imported modules; this file only
// moves strings between the page and the session state.

import { ApiClient } from "./api.js";
import { errorView, ratioView } from "./compare.js";
import { defaultDocumentFor, parseDocument, serializeDocument } from "./documents.js";
import { playbackState } from "./playback.js";
import { renderStep } from "./render.js";
import {
  initialSession,
  jumpTo,
  stepBack,
  stepForward,
  type SessionState,
} from "./session.js";
import type { ProblemsDocument } from "./types.js";

const api = new ApiClient(
  new URLSearchParams(window.location.search).get("api") ?? "http://127.0.0.1:7878",
);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const algorithmPicker = el<HTMLSelectElement>("algorithm");
const epsilonInput = el<HTMLInputElement>("epsilon");
const documentBox = el<HTMLTextAreaElement>("document");
const editorError = el<HTMLParagraphElement>("editor-error");
const stepView = el<HTMLDivElement>("step-view");
const cursorLabel = el<HTMLSpanElement>("cursor-label");
const cursorSlider = el<HTMLInputElement>("cursor");
const comparePanel = el<HTMLDivElement>("compare-panel");

let catalog: ProblemsDocument = { problems: [] };
let state: SessionState = initialSession(defaultDocumentFor("graph"), "vertex-cover-approx");

function needsEpsilon(algorithm: string): boolean {
  return algorithm.endsWith("fptas");
}

function renderSession(): void {
  editorError.textContent = state.editorError ?? "";
  editorError.hidden = state.editorError === null;
  epsilonInput.disabled = !needsEpsilon(state.algorithm);
  if (state.trace) {
    const playback = playbackState(state.trace, state.cursor);
    stepView.innerHTML = renderStep(state.document, state.trace, playback);
    cursorSlider.max = String(state.trace.events.length);
    cursorSlider.value = String(state.cursor);
    cursorLabel.textContent = `${state.cursor} / ${state.trace.events.length}`;
  } else {
    stepView.innerHTML = `<p class="step-description">run an algorithm to see its steps</p>`;
    cursorLabel.textContent = "–";
  }
  const comparison = state.comparison;
  if (!comparison) {
    comparePanel.innerHTML = `<p class="muted">no comparison yet</p>`;
  } else if (comparison.kind === "message") {
    comparePanel.innerHTML = `<p class="compare-message">${comparison.message}</p>`;
  } else {
    const rows = comparison.lines
      .map(([label, value]) => `<tr><th>${label}</th><td>${value}</td></tr>`)
      .join("");
    comparePanel.innerHTML =
      `<table>${rows}</table>` +
      (comparison.badge ? `<p class="badge">${comparison.badge}</p>` : "");
  }
}

function currentEpsilon(): number | undefined {
  if (!needsEpsilon(state.algorithm)) return undefined;
  const value = Number(epsilonInput.value);
  return Number.isFinite(value) && value > 0 && value < 1 ? value : 0.4;
}

function readDocument(): boolean {
  const parsed = parseDocument(documentBox.value);
  if (!parsed.ok) {
    state = { ...state, editorError: parsed.error };
    renderSession();
    return false;
  }
  state = { ...state, document: parsed.value, editorError: null };
  documentBox.value = serializeDocument(parsed.value);
  return true;
}

async function runTrace(): Promise<void> {
  if (!readDocument()) return;
  try {
    const trace = await api.trace(state.algorithm, state.document, { epsilon: currentEpsilon() });
    state = { ...state, trace, cursor: 0 };
  } catch (err) {
    state = { ...state, editorError: err instanceof Error ? err.message : String(err) };
  }
  renderSession();
}

async function runCompare(): Promise<void> {
  if (!readDocument()) return;
  try {
    const record = await api.compare(state.algorithm, state.document, { epsilon: currentEpsilon() });
    state = { ...state, comparison: ratioView(record) };
  } catch (err) {
    state = { ...state, comparison: errorView(err) };
  }
  renderSession();
}

function pickAlgorithm(name: string): void {
  const entry = catalog.problems.find((p) => p.algorithms.includes(name));
  state = { ...state, algorithm: name, trace: null, cursor: 0, comparison: null };
  if (entry && state.document.kind !== entry.instance_kind) {
    state = { ...state, document: defaultDocumentFor(entry.instance_kind) };
    documentBox.value = serializeDocument(state.document);
  }
  renderSession();
}

async function boot(): Promise<void> {
  try {
    catalog = await api.problems();
  } catch {
    editorError.hidden = false;
    editorError.textContent =
      "cannot reach the solver API — start it with: approx-lab serve";
  }
  algorithmPicker.innerHTML = catalog.problems
    .map(
      (p) =>
        `<optgroup label="${p.kind}">` +
        p.algorithms.map((a) => `<option value="${a}">${a}</option>`).join("") +
        `</optgroup>`,
    )
    .join("");
  algorithmPicker.value = state.algorithm;
  documentBox.value = serializeDocument(state.document);

  algorithmPicker.addEventListener("change", () => pickAlgorithm(algorithmPicker.value));
  documentBox.addEventListener("change", () => readDocument() && renderSession());
  el<HTMLButtonElement>("run-trace").addEventListener("click", () => void runTrace());
  el<HTMLButtonElement>("run-compare").addEventListener("click", () => void runCompare());
  el<HTMLButtonElement>("step-back").addEventListener("click", () => {
    state = stepBack(state);
    renderSession();
  });
  el<HTMLButtonElement>("step-forward").addEventListener("click", () => {
    state = stepForward(state);
    renderSession();
  });
  cursorSlider.addEventListener("input", () => {
    state = jumpTo(state, Number(cursorSlider.value));
    renderSession();
  });
  renderSession();
}

void boot();
