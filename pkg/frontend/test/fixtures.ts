// Loader for the HTTP exchanges recorded from the real service.

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

export interface Exchange {
  request: { method: string; path: string; body: unknown };
  response: { status: number; body: any };
}

export interface Fixture {
  name: string;
  exchanges: Exchange[];
}

const FIXTURE_DIR = join(dirname(fileURLToPath(import.meta.url)), "..", "fixtures");

export function loadFixture(name: string): Fixture {
  const raw = readFileSync(join(FIXTURE_DIR, `${name}.json`), "utf-8");
  return JSON.parse(raw) as Fixture;
}

export function cohortExchanges(fixture: Fixture): Exchange[] {
  return fixture.exchanges.filter((ex) =>
    ex.request.method === "POST" && ex.request.path.endsWith("/cohorts"),
  );
}
