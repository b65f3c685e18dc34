// Thin fetch client for the serve API.  Each panel keeps one in-flight
// request at a time; firing a new one aborts the previous.

import type {
  ApiErrorDocument,
  InstanceDocument,
  OutcomeDocument,
  ProblemsDocument,
  RatioDocument,
  TraceDocument,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly category: ApiErrorDocument["category"],
    readonly status: number,
  ) {
    super(message);
  }
}

export interface SolveOptions {
  epsilon?: number;
  root?: number;
  force?: boolean;
}

function query(options: SolveOptions): string {
  const params = new URLSearchParams();
  if (options.epsilon !== undefined) params.set("epsilon", String(options.epsilon));
  if (options.root !== undefined) params.set("root", String(options.root));
  if (options.force) params.set("force", "true");
  const text = params.toString();
  return text ? `?${text}` : "";
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private inflight = new Map<string, AbortController>();

  private async request<T>(
    panel: string,
    path: string,
    body: string | null,
  ): Promise<T> {
    this.inflight.get(panel)?.abort();
    const controller = new AbortController();
    this.inflight.set(panel, controller);
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: body === null ? "GET" : "POST",
      body,
      signal: controller.signal,
    });
    const text = await response.text();
    if (!response.ok) {
      let doc: ApiErrorDocument;
      try {
        doc = JSON.parse(text) as ApiErrorDocument;
      } catch {
        doc = { error: text || response.statusText, category: "internal" };
      }
      throw new ApiError(doc.error, doc.category, response.status);
    }
    return JSON.parse(text) as T;
  }

  problems(): Promise<ProblemsDocument> {
    return this.request("problems", "/problems", null);
  }

  solve(algorithm: string, doc: InstanceDocument, options: SolveOptions = {}): Promise<OutcomeDocument> {
    return this.request("solve", `/solve/${algorithm}${query(options)}`, JSON.stringify(doc));
  }

  trace(algorithm: string, doc: InstanceDocument, options: SolveOptions = {}): Promise<TraceDocument> {
    return this.request("trace", `/trace/${algorithm}${query(options)}`, JSON.stringify(doc));
  }

  compare(algorithm: string, doc: InstanceDocument, options: SolveOptions = {}): Promise<RatioDocument> {
    return this.request("compare", `/compare/${algorithm}${query(options)}`, JSON.stringify(doc));
  }
}
