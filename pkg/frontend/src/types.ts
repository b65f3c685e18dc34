// Wire contracts of the approx-lab serve API.  The UI contains no solver
// logic; these documents are the whole interface.

export type InstanceDocument =
  | GraphDocument
  | MetricDocument
  | SubsetSumDocument
  | KnapsackDocument;

export interface GraphDocument {
  kind: "graph";
  n: number;
  edges: [number, number, number][];
}

export interface MetricDocument {
  kind: "metric";
  n: number;
  cost: number[][];
}

export interface SubsetSumDocument {
  kind: "subset_sum";
  set: number[];
  t: number;
}

export interface KnapsackDocument {
  kind: "knapsack";
  items: [number, number][];
  capacity: number;
}

export type Certificate = Record<string, unknown> | null;

export interface OutcomeDocument {
  problem: string;
  algorithm: string;
  value: number;
  certificate: Certificate;
  is_exact: boolean;
  bound: number | null;
  guaranteed: boolean;
}

export interface TraceEvent {
  i: number;
  kind: string;
  payload: Record<string, unknown>;
}

export interface TraceDocument {
  v: number;
  problem: string;
  algorithm: string;
  digest: string;
  truncated: boolean;
  events: TraceEvent[];
  outcome: OutcomeDocument;
}

export interface RatioDocument {
  problem: string;
  instance_id: string;
  seed: number | null;
  approx: number;
  exact: number;
  ratio: number;
  bound: number;
  within_bound: boolean;
}

export interface ProblemEntry {
  kind: string;
  instance_kind: string;
  algorithms: string[];
}

export interface ProblemsDocument {
  problems: ProblemEntry[];
}

export interface ApiErrorDocument {
  error: string;
  category: "input" | "cap" | "internal";
}
