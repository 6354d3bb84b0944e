/** Play state: an immutable chain of positions, one legal jump apart.
 * Undo walks back along the chain, so it restores exactly. */

import { BoardGeometry } from "./board.js";
import type { AnalyzeResponse, Jump, PuzzleRecord } from "./types.js";

export class PuzzleFormatError extends Error {}

export class JumpRejected extends Error {
  constructor(
    readonly from: number,
    readonly to: number,
    reason: string,
  ) {
    super(reason);
  }
}

export class PlayState {
  readonly board: BoardGeometry;
  readonly record: PuzzleRecord;
  readonly pegs: ReadonlySet<number>;
  readonly history: readonly Jump[];
  /** Most recent service answer for this position, if any. */
  analysis: AnalyzeResponse | null = null;
  /** Finishing pattern of the puzzle's class, from the first analysis. */
  finishingHoles: number[] | null;
  private readonly parent: PlayState | null;

  private constructor(
    board: BoardGeometry,
    record: PuzzleRecord,
    pegs: ReadonlySet<number>,
    history: readonly Jump[],
    parent: PlayState | null,
  ) {
    this.board = board;
    this.record = record;
    this.pegs = pegs;
    this.history = history;
    this.parent = parent;
    this.finishingHoles = parent ? parent.finishingHoles : null;
  }

  /** Validate a puzzle record against a board descriptor and start play. */
  static load(record: PuzzleRecord, board: BoardGeometry): PlayState {
    if (!record || typeof record !== "object") {
      throw new PuzzleFormatError("puzzle record is not an object");
    }
    if (record.board !== board.id) {
      throw new PuzzleFormatError(
        `puzzle is for ${String(record.board)}, board is ${board.id}`,
      );
    }
    if (!Array.isArray(record.pegs) || record.pegs.length === 0) {
      throw new PuzzleFormatError("puzzle has no pegs");
    }
    const pegs = new Set<number>();
    for (const i of record.pegs) {
      if (!board.validHole(i)) {
        throw new PuzzleFormatError(`bad hole index ${String(i)}`);
      }
      if (pegs.has(i)) {
        throw new PuzzleFormatError(`duplicate peg at hole ${i}`);
      }
      pegs.add(i);
    }
    return new PlayState(board, record, pegs, [], null);
  }

  /** Apply the jump from one hole to another or throw JumpRejected. */
  attempt(from: number, to: number): PlayState {
    const jump = this.board.findJump(from, to);
    if (!jump) {
      throw new JumpRejected(from, to, "no lattice line from there to there");
    }
    if (!this.pegs.has(jump[0])) {
      throw new JumpRejected(from, to, "no peg to move");
    }
    if (!this.pegs.has(jump[1])) {
      throw new JumpRejected(from, to, "nothing to jump over");
    }
    if (this.pegs.has(jump[2])) {
      throw new JumpRejected(from, to, "landing hole is occupied");
    }
    const pegs = new Set(this.pegs);
    pegs.delete(jump[0]);
    pegs.delete(jump[1]);
    pegs.add(jump[2]);
    return new PlayState(
      this.board,
      this.record,
      pegs,
      [...this.history, jump],
      this,
    );
  }

  canUndo(): boolean {
    return this.parent !== null;
  }

  undo(): PlayState {
    if (!this.parent) {
      throw new Error("nothing to undo");
    }
    return this.parent;
  }

  /** A fresh state for the same puzzle, history gone. */
  reset(): PlayState {
    const start = PlayState.load(this.record, this.board);
    start.finishingHoles = this.finishingHoles;
    return start;
  }

  get solved(): boolean {
    return this.pegs.size === 1;
  }

  /** The last peg's hole once solved, else null. */
  get finalHole(): number | null {
    if (!this.solved) return null;
    const [hole] = this.pegs;
    return hole ?? null;
  }

  /** Solved with the last peg on one of the class's finishing holes. */
  get won(): boolean {
    if (!this.solved) return false;
    if (!this.finishingHoles) return true; // no analysis seen; trust the class
    return this.finishingHoles.includes(this.finalHole as number);
  }

  /** No legal jumps left and more than one peg: the game is stuck. */
  get dead(): boolean {
    return this.pegs.size > 1 && this.board.legalJumps(this.pegs).length === 0;
  }

  noteAnalysis(a: AnalyzeResponse): void {
    this.analysis = a;
    if (!this.finishingHoles) {
      this.finishingHoles = a.finishing_holes;
    }
  }

  pegList(): number[] {
    return [...this.pegs].sort((a, b) => a - b);
  }
}
