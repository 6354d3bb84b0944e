/** Board geometry as served: jump lookup tables and screen layout, all
 * derived from the descriptor. */

import type { BoardDescriptor, Jump } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

const SQRT3_2 = Math.sqrt(3) / 2;

export class BoardGeometry {
  readonly desc: BoardDescriptor;
  private readonly byFromTo: Map<number, Jump>;
  private readonly byFrom: Map<number, Jump[]>;

  constructor(desc: BoardDescriptor) {
    if (desc.holes.length !== desc.n_holes) {
      throw new Error(`descriptor for ${desc.id} is inconsistent`);
    }
    this.desc = desc;
    this.byFromTo = new Map();
    this.byFrom = new Map();
    for (const [from, over, to] of desc.jumps) {
      const jump: Jump = [from, over, to];
      this.byFromTo.set(from * desc.n_holes + to, jump);
      let list = this.byFrom.get(from);
      if (!list) this.byFrom.set(from, (list = []));
      list.push(jump);
    }
  }

  get id(): string {
    return this.desc.id;
  }

  get nHoles(): number {
    return this.desc.n_holes;
  }

  validHole(i: number): boolean {
    return Number.isInteger(i) && i >= 0 && i < this.desc.n_holes;
  }

  /** The jump triple from one hole to another, if the lattice has one. */
  findJump(from: number, to: number): Jump | undefined {
    if (!this.validHole(from) || !this.validHole(to)) return undefined;
    return this.byFromTo.get(from * this.desc.n_holes + to);
  }

  /** from and over occupied, to empty. */
  isLegal(pegs: ReadonlySet<number>, jump: Jump): boolean {
    const [from, over, to] = jump;
    return pegs.has(from) && pegs.has(over) && !pegs.has(to);
  }

  legalJumps(pegs: ReadonlySet<number>): Jump[] {
    const out: Jump[] = [];
    for (const [from, over, to] of this.desc.jumps) {
      if (pegs.has(from) && pegs.has(over) && !pegs.has(to)) {
        out.push([from, over, to]);
      }
    }
    return out;
  }

  legalJumpsFrom(pegs: ReadonlySet<number>, from: number): Jump[] {
    const list = this.byFrom.get(from) ?? [];
    return list.filter((j) => this.isLegal(pegs, j));
  }

  /** Hole centres in unit lattice coordinates (squares stay square, the
   * hexagon's axial coordinates get the usual 60-degree shear). */
  points(): Point[] {
    return this.desc.holes.map(([a, b]) =>
      this.desc.lattice === "hex"
        ? { x: a + b / 2, y: b * SQRT3_2 }
        : { x: a, y: b },
    );
  }

  /** points() scaled into a width x height box with the given margin. */
  layout(width: number, height: number, margin: number): Point[] {
    const pts = this.points();
    const xs = pts.map((p) => p.x);
    const ys = pts.map((p) => p.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    const scale = Math.min(
      (width - 2 * margin) / Math.max(maxX - minX, 1e-9),
      (height - 2 * margin) / Math.max(maxY - minY, 1e-9),
    );
    const offX = (width - (maxX - minX) * scale) / 2;
    const offY = (height - (maxY - minY) * scale) / 2;
    return pts.map((p) => ({
      x: offX + (p.x - minX) * scale,
      y: offY + (p.y - minY) * scale,
    }));
  }
}
