// Pure string rendering of an instance plus a playback state.  Everything
// a test needs to snapshot goes through here; main.ts only injects the
// returned strings into the page.

import { circularLayout } from "./layout.js";
import { certificateText, type PlaybackState } from "./playback.js";
import type { InstanceDocument, TraceDocument } from "./types.js";

function edgeKey(u: number, v: number): string {
  return `${Math.min(u, v)}-${Math.max(u, v)}`;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function graphSvg(
  n: number,
  edges: [number, number][],
  state: PlaybackState,
  tourClosed: boolean,
): string {
  const points = circularLayout(n);
  const removed = new Set(state.removedEdges.map(([u, v]) => edgeKey(u, v)));
  const mst = new Set(state.mstEdges.map(([u, v]) => edgeKey(u, v)));
  const picked = state.pickedEdge ? edgeKey(...state.pickedEdge) : null;
  const covered = new Set(state.cover);
  const pathVertices = state.searchStack.length ? state.searchStack : state.visits;
  const visited = new Set(pathVertices);

  const parts: string[] = [];
  parts.push(`<svg viewBox="0 0 320 320" class="instance-view">`);
  for (const [u, v] of edges) {
    const key = edgeKey(u, v);
    const classes = ["edge"];
    if (key === picked) classes.push("picked");
    if (removed.has(key)) classes.push("removed");
    if (mst.has(key)) classes.push("mst");
    const a = points[u]!;
    const b = points[v]!;
    parts.push(
      `<line class="${classes.join(" ")}" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" data-edge="${key}"/>`,
    );
  }
  // walked path (tour or DFS stack) drawn over the instance edges
  for (let k = 0; k + 1 < pathVertices.length; k++) {
    const a = points[pathVertices[k]!]!;
    const b = points[pathVertices[k + 1]!]!;
    parts.push(`<line class="edge walk" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}"/>`);
  }
  if (tourClosed && pathVertices.length === n && n > 1 && state.atEnd) {
    const a = points[pathVertices[n - 1]!]!;
    const b = points[pathVertices[0]!]!;
    parts.push(`<line class="edge walk closing" x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}"/>`);
  }
  for (let v = 0; v < n; v++) {
    const classes = ["vertex"];
    if (covered.has(v)) classes.push("in-cover");
    if (visited.has(v)) classes.push("visited");
    const p = points[v]!;
    parts.push(
      `<circle class="${classes.join(" ")}" cx="${p.x}" cy="${p.y}" r="14" data-vertex="${v}"/>` +
        `<text class="vertex-label" x="${p.x}" y="${p.y}">${v}</text>`,
    );
  }
  parts.push(`</svg>`);
  return parts.join("\n");
}

function metricEdges(n: number): [number, number][] {
  const out: [number, number][] = [];
  for (let u = 0; u < n; u++) for (let v = u + 1; v < n; v++) out.push([u, v]);
  return out;
}

function listHtml(state: PlaybackState): string {
  if (!state.list) return `<p class="list-view empty">no value list yet</p>`;
  const { round, label, values, elided, dropped } = state.list;
  const droppedSet = new Set(dropped);
  const cells = values
    .map((v) => `<span class="sum${droppedSet.has(v) ? " dropped" : ""}">${v}</span>`)
    .join("");
  const tail = elided > 0 ? `<span class="elided">… ${elided} more</span>` : "";
  const droppedCells = dropped.length
    ? `<p class="dropped-row">dropped: ${dropped.map((v) => `<span class="sum dropped">${v}</span>`).join("")}</p>`
    : "";
  return (
    `<div class="list-view"><p class="list-label">round ${round} (${label})</p>` +
    `<p class="sums">${cells}${tail}</p>${droppedCells}</div>`
  );
}

function itemsHtml(doc: InstanceDocument, state: PlaybackState): string {
  if (doc.kind !== "knapsack") return "";
  const taken = new Set(state.takenItems);
  const rows = doc.items
    .map(
      ([value, weight], index) =>
        `<tr class="${taken.has(index) ? "taken" : ""}" data-item="${index}">` +
        `<td>${index}</td><td>${value}</td><td>${weight}</td></tr>`,
    )
    .join("");
  return (
    `<table class="items-view"><thead><tr><th>item</th><th>value</th><th>weight</th></tr></thead>` +
    `<tbody>${rows}</tbody></table><p class="capacity">capacity ${doc.capacity}</p>`
  );
}

/** Render one playback step of a trace over its instance document. */
export function renderStep(
  doc: InstanceDocument,
  trace: TraceDocument,
  state: PlaybackState,
): string {
  const sections: string[] = [];
  if (state.truncated) {
    sections.push(`<div class="banner truncated">trace truncated at the event cap; replay disabled</div>`);
  }
  if (doc.kind === "graph") {
    sections.push(graphSvg(doc.n, doc.edges.map(([u, v]) => [u, v]), state, trace.problem === "hamiltonian"));
  } else if (doc.kind === "metric") {
    sections.push(graphSvg(doc.n, metricEdges(doc.n), state, true));
  } else if (doc.kind === "subset_sum") {
    sections.push(listHtml(state));
    sections.push(`<p class="target">target ${doc.t}</p>`);
  } else {
    sections.push(itemsHtml(doc, state));
  }
  sections.push(`<p class="step-description">${escapeHtml(state.description)}</p>`);
  if (state.atEnd) {
    sections.push(
      `<div class="final-view"><p>value: ${trace.outcome.value}</p>` +
        `<p>certificate: <code class="certificate">${escapeHtml(
          certificateText(state.finalCertificate),
        )}</code></p></div>`,
    );
  }
  return sections.join("\n");
}
