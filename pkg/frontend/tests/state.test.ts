import { describe, expect, it } from "vitest";

import { BoardGeometry } from "../src/board.js";
import { JumpRejected, PlayState, PuzzleFormatError } from "../src/state.js";
import type { PuzzleRecord } from "../src/types.js";
import { analyzedFor, descriptor, puzzlesFixture } from "./helpers.js";

const english = new BoardGeometry(descriptor("english33"));
const hex = new BoardGeometry(descriptor("hex37"));

function rec(board: string, pegs: number[]): PuzzleRecord {
  return {
    board,
    class: "B",
    code: 0,
    pegs,
    n_pegs: pegs.length,
    n_jumps: 0,
    n_winning_jumps: 0,
    hint: [0, 0, 0],
    symmetry_type: null,
    unique_solution: null,
    source: "test",
  };
}

describe("loading", () => {
  it("accepts every exported puzzle", () => {
    for (const p of puzzlesFixture()) {
      const st = PlayState.load(p, new BoardGeometry(descriptor(p.board)));
      expect(st.pegs.size).toBe(p.n_pegs);
      expect(st.history).toHaveLength(0);
      expect(st.canUndo()).toBe(false);
    }
  });

  it("rejects a record for a different board", () => {
    expect(() => PlayState.load(rec("french37", [0]), english)).toThrow(
      PuzzleFormatError,
    );
    expect(() => PlayState.load(rec("french37", [0]), english)).toThrow(
      /puzzle is for french37/,
    );
  });

  it("rejects empty or missing pegs", () => {
    expect(() => PlayState.load(rec("english33", []), english)).toThrow(
      /no pegs/,
    );
    const noPegs = { board: "english33" } as unknown as PuzzleRecord;
    expect(() => PlayState.load(noPegs, english)).toThrow(PuzzleFormatError);
  });

  it("rejects out-of-range and fractional hole indices", () => {
    expect(() => PlayState.load(rec("english33", [33]), english)).toThrow(
      /bad hole index 33/,
    );
    expect(() => PlayState.load(rec("english33", [-1]), english)).toThrow(
      /bad hole index/,
    );
    expect(() => PlayState.load(rec("english33", [1.5]), english)).toThrow(
      /bad hole index/,
    );
  });

  it("rejects duplicate pegs", () => {
    expect(() => PlayState.load(rec("english33", [5, 5]), english)).toThrow(
      /duplicate peg at hole 5/,
    );
  });

  it("rejects garbage", () => {
    expect(() =>
      PlayState.load(null as unknown as PuzzleRecord, english),
    ).toThrow(PuzzleFormatError);
  });
});

describe("jumps", () => {
  // Middle row of english33 is holes 13..19, so 14 -> 16 jumps over 15.
  it("applies a legal jump", () => {
    const st = PlayState.load(rec("english33", [14, 15, 17]), english);
    const next = st.attempt(14, 16);
    expect(next.pegList()).toEqual([16, 17]);
    expect(next.history).toEqual([[14, 15, 16]]);
    expect(st.pegList()).toEqual([14, 15, 17]); // the old state is untouched
  });

  it("rejects a diagonal", () => {
    const st = PlayState.load(rec("english33", [6, 13, 14, 15]), english);
    expect(() => st.attempt(6, 22)).toThrow(JumpRejected);
    expect(() => st.attempt(6, 22)).toThrow(/no lattice line/);
  });

  it("rejects a single-step move", () => {
    const st = PlayState.load(rec("english33", [14, 15, 17]), english);
    expect(() => st.attempt(14, 15)).toThrow(/no lattice line/);
  });

  it("rejects jumping from an empty hole", () => {
    const st = PlayState.load(rec("english33", [15, 17]), english);
    expect(() => st.attempt(14, 16)).toThrow(/no peg to move/);
  });

  it("rejects jumping over an empty hole", () => {
    const st = PlayState.load(rec("english33", [14, 17]), english);
    expect(() => st.attempt(14, 16)).toThrow(/nothing to jump over/);
  });

  it("rejects landing on a peg", () => {
    const st = PlayState.load(rec("english33", [14, 15, 16]), english);
    expect(() => st.attempt(14, 16)).toThrow(/landing hole is occupied/);
  });

  it("accepts a jump along a hex lattice line", () => {
    // The service reports [1, 2, 3] as the sole legal jump from {0, 1, 2}.
    const fx = analyzedFor("hex37", [0, 1, 2]);
    expect(fx.legal_jumps).toEqual([[1, 2, 3]]);
    const st = PlayState.load(rec("hex37", [0, 1, 2]), hex);
    const next = st.attempt(1, 3);
    expect(next.pegList()).toEqual([0, 3]);
  });

  it("rejects a hex pair with no lattice line", () => {
    const st = PlayState.load(rec("hex37", [0, 1, 2]), hex);
    const to = [...Array(hex.nHoles).keys()].find(
      (i) => i !== 1 && !hex.findJump(1, i),
    );
    expect(to).toBeDefined();
    expect(() => st.attempt(1, to as number)).toThrow(/no lattice line/);
  });
});

describe("history", () => {
  it("undo restores the previous position exactly", () => {
    const start = PlayState.load(puzzlesFixture()[0]!, english);
    let st = start;
    const seen = [st.pegList()];
    for (let k = 0; k < 3; k++) {
      const jump = st.board.legalJumps(st.pegs)[0];
      if (!jump) break;
      st = st.attempt(jump[0], jump[2]);
      seen.push(st.pegList());
    }
    expect(st.history.length).toBeGreaterThan(0);
    while (st.canUndo()) {
      seen.pop();
      st = st.undo();
      expect(st.pegList()).toEqual(seen[seen.length - 1]);
    }
    expect(st).toBe(start);
    expect(st.history).toHaveLength(0);
    expect(() => st.undo()).toThrow(/nothing to undo/);
  });

  it("replaying the history reproduces the position", () => {
    let st = PlayState.load(puzzlesFixture()[0]!, english);
    for (let k = 0; k < 4; k++) {
      const jump = st.board.legalJumps(st.pegs)[0];
      if (!jump) break;
      st = st.attempt(jump[0], jump[2]);
    }
    let replay = PlayState.load(st.record, st.board);
    for (const [from, , to] of st.history) {
      replay = replay.attempt(from, to);
    }
    expect(replay.pegList()).toEqual(st.pegList());
  });

  it("reset gives a fresh start but keeps the finishing pattern", () => {
    const fx = analyzedFor("english33", [14, 15, 17]);
    let st = PlayState.load(rec("english33", [14, 15, 17]), english);
    st.noteAnalysis(fx);
    st = st.attempt(14, 16);
    const fresh = st.reset();
    expect(fresh.pegList()).toEqual([14, 15, 17]);
    expect(fresh.history).toHaveLength(0);
    expect(fresh.canUndo()).toBe(false);
    expect(fresh.finishingHoles).toEqual(fx.finishing_holes);
  });
});

describe("endings", () => {
  it("detects a win on a finishing hole", () => {
    const fx = analyzedFor("english33", [14, 15, 17]);
    expect(fx.winning_jumps).toEqual([[14, 15, 16]]);
    expect(fx.finishing_holes).toContain(18);
    let st = PlayState.load(rec("english33", [14, 15, 17]), english);
    st.noteAnalysis(fx);
    expect(st.solved).toBe(false);
    expect(st.finalHole).toBeNull();
    st = st.attempt(14, 16);
    st = st.attempt(16, 18);
    expect(st.solved).toBe(true);
    expect(st.finalHole).toBe(18);
    expect(st.won).toBe(true);
    expect(st.history).toEqual([
      [14, 15, 16],
      [16, 17, 18],
    ]);
  });

  it("a final peg off the finishing pattern is not a win", () => {
    const st = PlayState.load(rec("english33", [14, 15]), english);
    st.finishingHoles = [0, 2];
    const done = st.attempt(14, 16);
    expect(done.solved).toBe(true);
    expect(done.finalHole).toBe(16);
    expect(done.won).toBe(false);
  });

  it("with no analysis seen, any single peg counts as solved and won", () => {
    const st = PlayState.load(rec("english33", [14, 15]), english);
    expect(st.attempt(14, 16).won).toBe(true);
  });

  it("detects a dead position", () => {
    const st = PlayState.load(rec("english33", [13, 17]), english);
    expect(st.dead).toBe(true);
    expect(st.solved).toBe(false);
    const live = PlayState.load(rec("english33", [14, 15, 17]), english);
    expect(live.dead).toBe(false);
    expect(live.attempt(15, 13).dead).toBe(true); // {13, 17} again
  });
});
