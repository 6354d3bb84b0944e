import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, isAbort } from "../src/api.js";
import type { FetchLike } from "../src/api.js";
import {
  analyzedFor,
  fixtureFetch,
  hinted,
  jsonResponse,
  puzzlesFixture,
} from "./helpers.js";

function client(fetchFn: FetchLike = fixtureFetch()): ApiClient {
  return new ApiClient("http://test", fetchFn);
}

describe("requests", () => {
  it("lists boards", async () => {
    const boards = await client().boards();
    expect(boards.map((b) => b.id)).toEqual([
      "english33",
      "french37",
      "square36",
      "hex37",
    ]);
    for (const b of boards) {
      expect(["square", "hex"]).toContain(b.lattice);
      expect(b.holes).toHaveLength(b.n_holes);
    }
  });

  it("lists puzzles", async () => {
    const puzzles = await client().puzzles();
    expect(puzzles).toEqual(puzzlesFixture());
    expect(puzzles.length).toBeGreaterThan(0);
  });

  it("analyzes a position", async () => {
    const a = await client().analyze("english33", [14, 15, 17]);
    expect(a).toEqual(analyzedFor("english33", [14, 15, 17]));
    expect(a.class).toBe("B");
  });

  it("passes service errors through with their detail", async () => {
    const f: FetchLike = async () =>
      jsonResponse(400, { detail: "bad hole index 99" });
    const err = await client(f)
      .analyze("english33", [99])
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(400);
    expect((err as ApiError).message).toBe("bad hole index 99");
  });

  it("falls back to the status text when the body is not json", async () => {
    const f: FetchLike = async () =>
      new Response("boom", { status: 503, statusText: "Service Unavailable" });
    const err = await client(f)
      .boards()
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(503);
    expect((err as ApiError).message).toBe("Service Unavailable");
  });

  it("lets network failures through untouched", async () => {
    const f: FetchLike = () => Promise.reject(new TypeError("fetch failed"));
    const err = await client(f)
      .boards()
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(TypeError);
    expect(isAbort(err)).toBe(false);
  });
});

describe("hints", () => {
  it("returns the winning jump as a triple", async () => {
    const start = hinted().find((h) => h.pegs.length === 32);
    expect(start).toBeDefined();
    const answer = await client().hint("english33", start!.pegs);
    expect(answer).toEqual([4, 9, 16]);
  });

  it("returns the message for a hopeless position", async () => {
    const answer = await client().hint("english33", [0, 32]);
    expect(answer).toBe("not solvable from here");
  });

  it("falls back to a stock message when the service sends neither", async () => {
    const f: FetchLike = async () => jsonResponse(200, {});
    expect(await client(f).hint("english33", [0])).toBe("no winning jump");
  });
});

describe("analysis cancellation", () => {
  it("a newer analyze aborts the older one", async () => {
    const pending: ((r: Response) => void)[] = [];
    const f: FetchLike = (_url, init) =>
      new Promise((resolve, reject) => {
        init?.signal?.addEventListener("abort", () =>
          reject(new DOMException("aborted", "AbortError")),
        );
        pending.push(resolve);
      });
    const api = client(f);

    const first = api
      .analyze("english33", [16])
      .then(() => null, (e: unknown) => e);
    const second = api.analyze("english33", [16]);
    expect(pending).toHaveLength(2);

    const err = await first;
    expect(isAbort(err)).toBe(true);

    pending[1]!(jsonResponse(200, analyzedFor("english33", [16])));
    expect((await second).class).toBe("A");
  });

  it("a finished analyze does not abort the next one", async () => {
    let aborted = 0;
    const f: FetchLike = async (_url, init) => {
      init?.signal?.addEventListener("abort", () => {
        aborted += 1;
      });
      return jsonResponse(200, analyzedFor("english33", [16]));
    };
    const api = client(f);
    await api.analyze("english33", [16]);
    await api.analyze("english33", [16]);
    expect(aborted).toBe(0);
  });

  it("hints are not cancelled by analysis", async () => {
    const api = client();
    const hintP = api.hint("english33", [0, 1]);
    await api.analyze("english33", [16]);
    expect(await hintP).toEqual([0, 1, 2]);
  });
});
