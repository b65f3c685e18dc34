// Client-side mirror of the instance file format: parsing, the validity
// rules, and canonical serialization.  The editor never submits anything
// the server validator would reject, so the rules here must match the
// server's exactly.

import type {
  GraphDocument,
  InstanceDocument,
  KnapsackDocument,
  MetricDocument,
  SubsetSumDocument,
} from "./types.js";

export type ParseResult =
  | { ok: true; value: InstanceDocument }
  | { ok: false; error: string };

function isInt(x: unknown): x is number {
  return typeof x === "number" && Number.isInteger(x);
}

function isFiniteNumber(x: unknown): x is number {
  return typeof x === "number" && Number.isFinite(x);
}

export function validateGraph(doc: GraphDocument): string | null {
  if (!isInt(doc.n) || doc.n < 0) return `vertex count must be a nonnegative integer`;
  const seen = new Set<string>();
  for (const edge of doc.edges) {
    if (!Array.isArray(edge) || edge.length !== 3) return `edge ${JSON.stringify(edge)} must be [u, v, w]`;
    const [u, v, w] = edge;
    if (!isInt(u) || !isInt(v)) return `edge endpoints must be integers`;
    if (u < 0 || u >= doc.n || v < 0 || v >= doc.n)
      return `edge (${u},${v}) has a vertex id out of range [0,${doc.n})`;
    if (u === v) return `self-loop at vertex ${u}`;
    const key = `${Math.min(u, v)},${Math.max(u, v)}`;
    if (seen.has(key)) return `duplicate edge {${key}}`;
    seen.add(key);
    if (!isFiniteNumber(w) || w < 0) return `edge (${u},${v}) cost must be a nonnegative number`;
  }
  return null;
}

export function validateMetric(doc: MetricDocument): string | null {
  if (!isInt(doc.n) || doc.n < 0) return `vertex count must be a nonnegative integer`;
  if (!Array.isArray(doc.cost) || doc.cost.length !== doc.n)
    return `cost matrix must have ${doc.n} rows`;
  for (let i = 0; i < doc.n; i++) {
    const row = doc.cost[i]!;
    if (!Array.isArray(row) || row.length !== doc.n) return `cost row ${i} must have ${doc.n} entries`;
    for (let j = 0; j < doc.n; j++) {
      const c = row[j];
      if (!isFiniteNumber(c) || c < 0) return `cost[${i}][${j}] must be a nonnegative number`;
    }
  }
  for (let i = 0; i < doc.n; i++) {
    if (doc.cost[i]![i] !== 0) return `cost[${i}][${i}] must be zero`;
    for (let j = i + 1; j < doc.n; j++) {
      if (doc.cost[i]![j] !== doc.cost[j]![i]) return `asymmetric matrix: cost[${i}][${j}] != cost[${j}][${i}]`;
    }
  }
  return null;
}

export function validateSubsetSum(doc: SubsetSumDocument): string | null {
  if (!Array.isArray(doc.set)) return `set must be a list of positive integers`;
  for (let i = 0; i < doc.set.length; i++) {
    const x = doc.set[i];
    if (!isInt(x) || x < 1) return `set element ${i} must be a positive integer`;
  }
  if (!isInt(doc.t) || doc.t < 1) return `target must be a positive integer`;
  return null;
}

export function validateKnapsack(doc: KnapsackDocument): string | null {
  if (!Array.isArray(doc.items)) return `items must be a list of [value, weight] pairs`;
  for (let i = 0; i < doc.items.length; i++) {
    const item = doc.items[i]!;
    if (!Array.isArray(item) || item.length !== 2) return `item ${i} must be [value, weight]`;
    const [value, weight] = item;
    if (!isInt(value) || value < 1) return `item ${i} value must be a positive integer`;
    if (!isInt(weight) || weight < 1) return `item ${i} weight must be a positive integer`;
  }
  if (!isInt(doc.capacity) || doc.capacity < 0) return `capacity must be a nonnegative integer`;
  return null;
}

export function validateDocument(doc: InstanceDocument): string | null {
  switch (doc.kind) {
    case "graph":
      return validateGraph(doc);
    case "metric":
      return validateMetric(doc);
    case "subset_sum":
      return validateSubsetSum(doc);
    case "knapsack":
      return validateKnapsack(doc);
    default:
      return `unknown problem kind ${JSON.stringify((doc as { kind?: unknown }).kind)}`;
  }
}

export function parseDocument(text: string): ParseResult {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (err) {
    return { ok: false, error: `malformed instance document: ${(err as Error).message}` };
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    return { ok: false, error: "instance document must be a JSON object" };
  }
  const doc = raw as InstanceDocument;
  const problem = validateDocument(doc);
  if (problem !== null) return { ok: false, error: problem };
  return { ok: true, value: canonicalDocument(doc) };
}

/** Same canonical form the server writes: fixed key order, edges sorted
 * with u < v, subset-sum sets ascending. */
export function canonicalDocument(doc: InstanceDocument): InstanceDocument {
  switch (doc.kind) {
    case "graph": {
      const edges = doc.edges
        .map(([u, v, w]) => (u < v ? [u, v, w] : [v, u, w]) as [number, number, number])
        .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
      return { kind: "graph", n: doc.n, edges };
    }
    case "metric":
      return { kind: "metric", n: doc.n, cost: doc.cost.map((row) => [...row]) };
    case "subset_sum":
      return { kind: "subset_sum", set: [...doc.set].sort((a, b) => a - b), t: doc.t };
    case "knapsack":
      return {
        kind: "knapsack",
        items: doc.items.map(([v, w]) => [v, w] as [number, number]),
        capacity: doc.capacity,
      };
  }
}

export function serializeDocument(doc: InstanceDocument): string {
  return JSON.stringify(canonicalDocument(doc));
}

/** Instance kind consumed by each problem in the catalog. */
export function defaultDocumentFor(instanceKind: string): InstanceDocument {
  switch (instanceKind) {
    case "graph":
      return { kind: "graph", n: 3, edges: [[0, 1, 1], [1, 2, 1]] };
    case "metric":
      return {
        kind: "metric",
        n: 4,
        cost: [
          [0, 1, 2, 1],
          [1, 0, 1, 2],
          [2, 1, 0, 1],
          [1, 2, 1, 0],
        ],
      };
    case "subset_sum":
      return { kind: "subset_sum", set: [101, 102, 104, 201], t: 308 };
    case "knapsack":
      return { kind: "knapsack", items: [[60, 10], [100, 20], [120, 30]], capacity: 50 };
    default:
      return { kind: "graph", n: 1, edges: [] };
  }
}
