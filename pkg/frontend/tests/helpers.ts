import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { InstanceDocument, TraceDocument } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));

export function fixtureText(name: string): string {
  return readFileSync(join(here, "fixtures", name), "utf-8");
}

export function fixtureTrace(name: string): TraceDocument {
  return JSON.parse(fixtureText(name)) as TraceDocument;
}

export function fixtureInstance(name: string): InstanceDocument {
  return JSON.parse(fixtureText(name)) as InstanceDocument;
}
