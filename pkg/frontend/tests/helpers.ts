/** Recorded service traffic, shared by the tests.
 *
 * fixtures/service_fixtures.json is recorded from the real service
 * (`pegkit fixtures`), so asserting against it is asserting against the
 * engine's actual answers, replayed offline.
 */

import { readFileSync } from "node:fs";
import { resolve } from "node:path";

import type { FetchLike } from "../src/api.js";
import type {
  AnalyzeResponse,
  BoardDescriptor,
  HintResponse,
  PuzzleRecord,
} from "../src/types.js";

export interface Recorded {
  method: string;
  path: string;
  request: { board: string; pegs: number[] } | null;
  status: number;
  response: unknown;
}

// Resolved from the package root (vitest runs with cwd there); the jsdom
// environment rewrites import.meta.url, so file URLs are no use here.
const raw = readFileSync(resolve("fixtures/service_fixtures.json"), "utf8");
export const recorded: Recorded[] = JSON.parse(raw) as Recorded[];

function one(pred: (r: Recorded) => boolean, what: string): Recorded {
  const hits = recorded.filter(pred);
  if (hits.length !== 1 || !hits[0]) {
    throw new Error(`expected one recorded ${what}, found ${hits.length}`);
  }
  return hits[0];
}

export function boardsFixture(): BoardDescriptor[] {
  return one((r) => r.path === "/boards", "GET /boards")
    .response as BoardDescriptor[];
}

export function descriptor(id: string): BoardDescriptor {
  const d = boardsFixture().find((b) => b.id === id);
  if (!d) throw new Error(`no descriptor for ${id}`);
  return d;
}

export function puzzlesFixture(): PuzzleRecord[] {
  return one((r) => r.path === "/puzzles", "GET /puzzles")
    .response as PuzzleRecord[];
}

export function analyzed(): {
  board: string;
  pegs: number[];
  response: AnalyzeResponse;
}[] {
  return recorded
    .filter((r) => r.path === "/analyze" && r.status === 200)
    .map((r) => ({
      board: r.request!.board,
      pegs: r.request!.pegs,
      response: r.response as AnalyzeResponse,
    }));
}

export function analyzedFor(board: string, pegs: number[]): AnalyzeResponse {
  const want = JSON.stringify([...pegs].sort((a, b) => a - b));
  const hit = analyzed().find(
    (r) =>
      r.board === board &&
      JSON.stringify([...r.pegs].sort((a, b) => a - b)) === want,
  );
  if (!hit) throw new Error(`no recorded analysis of ${board} ${want}`);
  return hit.response;
}

export function hinted(): {
  board: string;
  pegs: number[];
  response: HintResponse;
}[] {
  return recorded
    .filter((r) => r.path === "/hint" && r.status === 200)
    .map((r) => ({
      board: r.request!.board,
      pegs: r.request!.pegs,
      response: r.response as HintResponse,
    }));
}

/** A fetch that replays the recorded exchanges; anything else is 404. */
export function fixtureFetch(): FetchLike {
  return async (url, init) => {
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : null;
    const hit = recorded.find(
      (r) =>
        r.method === method &&
        (method === "GET"
          ? r.path === path.replace(/\?.*/, "")
          : r.path === path && JSON.stringify(r.request) === JSON.stringify(body)),
    );
    if (!hit) {
      return jsonResponse(404, { detail: "not recorded" });
    }
    return jsonResponse(hit.status, hit.response);
  };
}

export function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function pegSet(pegs: number[]): Set<number> {
  return new Set(pegs);
}

export function sortedTriples(
  triples: readonly (readonly number[])[],
): string[] {
  return triples.map((t) => t.join(",")).sort();
}
