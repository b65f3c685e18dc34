// Structured instance editing.  Every action either produces a new valid
// document or reports the validator's message; nothing invalid ever
// leaves the editor.

import {
  canonicalDocument,
  serializeDocument,
  validateDocument,
} from "./documents.js";
import type {
  GraphDocument,
  InstanceDocument,
  KnapsackDocument,
  MetricDocument,
  SubsetSumDocument,
} from "./types.js";

export type EditResult =
  | { ok: true; value: InstanceDocument }
  | { ok: false; error: string };

function finish(doc: InstanceDocument): EditResult {
  const problem = validateDocument(doc);
  if (problem !== null) return { ok: false, error: problem };
  return { ok: true, value: canonicalDocument(doc) };
}

// --- graph actions ----------------------------------------------------------

export function addVertex(doc: GraphDocument): EditResult {
  return finish({ ...doc, n: doc.n + 1 });
}

/** Deleting a vertex drops its edges and renumbers the ids above it so
 * the id space stays dense. */
export function removeVertex(doc: GraphDocument, vertex: number): EditResult {
  if (vertex < 0 || vertex >= doc.n) return { ok: false, error: `no vertex ${vertex}` };
  const edges = doc.edges
    .filter(([u, v]) => u !== vertex && v !== vertex)
    .map(
      ([u, v, w]) =>
        [u > vertex ? u - 1 : u, v > vertex ? v - 1 : v, w] as [number, number, number],
    );
  return finish({ kind: "graph", n: doc.n - 1, edges });
}

export function addEdge(doc: GraphDocument, u: number, v: number, w: number): EditResult {
  return finish({ ...doc, edges: [...doc.edges, [u, v, w]] });
}

export function removeEdge(doc: GraphDocument, u: number, v: number): EditResult {
  const lo = Math.min(u, v);
  const hi = Math.max(u, v);
  const edges = doc.edges.filter(([a, b]) => !(Math.min(a, b) === lo && Math.max(a, b) === hi));
  if (edges.length === doc.edges.length) return { ok: false, error: `no edge {${lo},${hi}}` };
  return finish({ ...doc, edges });
}

// --- metric actions -----------------------------------------------------------

export function resizeMetric(doc: MetricDocument, n: number): EditResult {
  const cost = Array.from({ length: n }, (_, i) =>
    Array.from({ length: n }, (_, j) => (i === j ? 0 : doc.cost[i]?.[j] ?? 1)),
  );
  // preserve symmetry for entries that only exist on one side now
  for (let i = 0; i < n; i++)
    for (let j = i + 1; j < n; j++) cost[j]![i] = cost[i]![j]!;
  return finish({ kind: "metric", n, cost });
}

export function setMetricCost(doc: MetricDocument, i: number, j: number, value: number): EditResult {
  if (i === j) return { ok: false, error: "diagonal entries stay zero" };
  const cost = doc.cost.map((row) => [...row]);
  if (cost[i] === undefined || cost[i]![j] === undefined)
    return { ok: false, error: `no entry (${i},${j})` };
  cost[i]![j] = value;
  cost[j]![i] = value;
  return finish({ kind: "metric", n: doc.n, cost });
}

// --- subset-sum actions ---------------------------------------------------------

export function addElement(doc: SubsetSumDocument, x: number): EditResult {
  return finish({ ...doc, set: [...doc.set, x] });
}

export function removeElementAt(doc: SubsetSumDocument, index: number): EditResult {
  if (index < 0 || index >= doc.set.length) return { ok: false, error: `no element ${index}` };
  return finish({ ...doc, set: doc.set.filter((_, i) => i !== index) });
}

export function setTarget(doc: SubsetSumDocument, t: number): EditResult {
  return finish({ ...doc, t });
}

// --- knapsack actions -------------------------------------------------------------

export function addItem(doc: KnapsackDocument, value: number, weight: number): EditResult {
  return finish({ ...doc, items: [...doc.items, [value, weight]] });
}

export function removeItemAt(doc: KnapsackDocument, index: number): EditResult {
  if (index < 0 || index >= doc.items.length) return { ok: false, error: `no item ${index}` };
  return finish({ ...doc, items: doc.items.filter((_, i) => i !== index) });
}

export function setCapacity(doc: KnapsackDocument, capacity: number): EditResult {
  return finish({ ...doc, capacity });
}

export { serializeDocument };
