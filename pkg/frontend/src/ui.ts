/** DOM layer: renders the board, drives play by click or drag, shows the
 * live analysis, and fetches hints on demand. */

import { ApiClient, ApiError, isAbort } from "./api.js";
import { BoardGeometry } from "./board.js";
import { JumpRejected, PlayState, PuzzleFormatError } from "./state.js";
import type { BoardDescriptor, Jump, PuzzleRecord } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW = 440;
const MARGIN = 34;
const HOLE_R = 13;

export class PlayerUI {
  state: PlayState | null = null;
  selected: number | null = null;
  hintJump: Jump | null = null;

  private readonly api: ApiClient;
  private readonly doc: Document;
  private readonly svg: SVGSVGElement;
  private readonly statusEl: HTMLElement;
  private readonly noticeEl: HTMLElement;
  private readonly bannerEl: HTMLElement;
  private readonly toastEl: HTMLElement;
  private readonly hintBtn: HTMLButtonElement;
  private readonly undoBtn: HTMLButtonElement;
  private readonly resetBtn: HTMLButtonElement;
  private dragFrom: number | null = null;
  private suppressClick = false;
  private toastTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(root: HTMLElement, api: ApiClient) {
    this.api = api;
    this.doc = root.ownerDocument;

    this.bannerEl = this.child(root, "div", "banner hidden");
    this.svg = this.doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
    this.svg.setAttribute("viewBox", `0 0 ${VIEW} ${VIEW}`);
    this.svg.setAttribute("class", "board");
    root.appendChild(this.svg);

    const bar = this.child(root, "div", "controls");
    this.hintBtn = this.button(bar, "hint", "Hint", () => void this.hint());
    this.undoBtn = this.button(bar, "undo", "Undo", () => this.undo());
    this.resetBtn = this.button(bar, "reset", "Reset", () => this.reset());

    this.statusEl = this.child(root, "div", "status");
    this.noticeEl = this.child(root, "div", "notice hidden");
    this.toastEl = this.child(root, "div", "toast hidden");
  }

  private child(parent: HTMLElement, tag: string, cls: string): HTMLElement {
    const el = this.doc.createElement(tag);
    el.className = cls;
    parent.appendChild(el);
    return el;
  }

  private button(
    parent: HTMLElement,
    cls: string,
    label: string,
    onClick: () => void,
  ): HTMLButtonElement {
    const b = this.doc.createElement("button");
    b.className = cls;
    b.textContent = label;
    b.addEventListener("click", onClick);
    parent.appendChild(b);
    return b;
  }

  /** Start playing a puzzle record; a malformed one raises the banner. */
  loadPuzzle(record: PuzzleRecord, desc: BoardDescriptor): void {
    this.bannerEl.classList.add("hidden");
    try {
      this.state = PlayState.load(record, new BoardGeometry(desc));
    } catch (err) {
      if (err instanceof PuzzleFormatError || err instanceof Error) {
        this.state = null;
        this.bannerEl.textContent = `cannot load puzzle: ${err.message}`;
        this.bannerEl.classList.remove("hidden");
        this.render();
        return;
      }
      throw err;
    }
    this.selected = null;
    this.hintJump = null;
    this.render();
    void this.refreshAnalysis();
  }

  attempt(from: number, to: number): void {
    if (!this.state) return;
    try {
      this.setState(this.state.attempt(from, to));
    } catch (err) {
      if (err instanceof JumpRejected) {
        if (this.state.pegs.has(to) && to !== from) {
          this.selected = to; // treat as picking a different peg
          this.render();
        } else {
          this.toast(`no: ${err.message}`);
        }
        return;
      }
      throw err;
    }
  }

  undo(): void {
    if (this.state?.canUndo()) {
      this.setState(this.state.undo());
    }
  }

  reset(): void {
    if (this.state) {
      this.setState(this.state.reset());
    }
  }

  async hint(): Promise<void> {
    const s = this.state;
    if (!s || s.solved) return;
    this.hintBtn.disabled = true;
    try {
      const answer = await this.api.hint(s.board.id, s.pegList());
      if (this.state !== s) return; // position changed while waiting
      if (typeof answer === "string") {
        this.notice(`no winning jump: ${answer}`);
      } else {
        this.hintJump = answer;
        this.render();
      }
    } catch (err) {
      if (!isAbort(err)) this.toast(this.describe(err));
    } finally {
      this.hintBtn.disabled = false;
    }
  }

  private setState(next: PlayState): void {
    this.state = next;
    this.selected = null;
    this.hintJump = null;
    this.noticeEl.classList.add("hidden");
    this.render();
    void this.refreshAnalysis();
  }

  private async refreshAnalysis(): Promise<void> {
    const s = this.state;
    if (!s) return;
    try {
      const a = await this.api.analyze(s.board.id, s.pegList());
      if (this.state === s) {
        s.noteAnalysis(a);
        this.render();
      }
    } catch (err) {
      if (isAbort(err)) return; // a newer request took over
      this.toast(this.describe(err));
    }
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) return `service said ${err.status}: ${err.message}`;
    return `service unreachable: ${err instanceof Error ? err.message : String(err)}`;
  }

  private onHoleClick(i: number): void {
    if (this.suppressClick) {
      this.suppressClick = false;
      return;
    }
    const s = this.state;
    if (!s) return;
    if (this.selected === null) {
      if (s.pegs.has(i)) {
        this.selected = i;
        this.render();
      }
      return;
    }
    if (this.selected === i) {
      this.selected = null;
      this.render();
      return;
    }
    this.attempt(this.selected, i);
  }

  private onHoleDown(i: number): void {
    if (this.state?.pegs.has(i)) {
      this.dragFrom = i;
    }
  }

  private onHoleUp(i: number): void {
    const from = this.dragFrom;
    this.dragFrom = null;
    if (from !== null && from !== i) {
      this.suppressClick = true;
      this.selected = from;
      this.attempt(from, i);
    }
  }

  toast(message: string): void {
    this.toastEl.textContent = message;
    this.toastEl.classList.remove("hidden");
    if (this.toastTimer) clearTimeout(this.toastTimer);
    this.toastTimer = setTimeout(() => {
      this.toastEl.classList.add("hidden");
    }, 2500);
  }

  notice(message: string): void {
    this.noticeEl.textContent = message;
    this.noticeEl.classList.remove("hidden");
  }

  render(): void {
    while (this.svg.firstChild) this.svg.removeChild(this.svg.firstChild);
    const s = this.state;
    this.undoBtn.disabled = !s?.canUndo();
    this.resetBtn.disabled = !s;
    this.hintBtn.disabled = !s || s.solved;
    if (!s) {
      this.statusEl.textContent = "";
      return;
    }

    const pts = s.board.layout(VIEW, VIEW, MARGIN);
    const targets = new Set(
      this.selected === null
        ? []
        : s.board.legalJumpsFrom(s.pegs, this.selected).map((j) => j[2]),
    );
    const finishing = new Set(s.finishingHoles ?? []);

    if (this.hintJump) {
      const [f, , t] = this.hintJump;
      const a = pts[f];
      const b = pts[t];
      if (a && b) {
        const line = this.doc.createElementNS(SVG_NS, "line");
        line.setAttribute("class", "hint-arrow");
        line.setAttribute("x1", String(a.x));
        line.setAttribute("y1", String(a.y));
        line.setAttribute("x2", String(b.x));
        line.setAttribute("y2", String(b.y));
        this.svg.appendChild(line);
      }
    }

    for (let i = 0; i < s.board.nHoles; i++) {
      const p = pts[i];
      if (!p) continue;
      const c = this.doc.createElementNS(SVG_NS, "circle");
      const cls = ["hole"];
      if (s.pegs.has(i)) cls.push("peg");
      if (finishing.has(i)) cls.push("finishing");
      if (this.selected === i) cls.push("selected");
      if (targets.has(i)) cls.push("target");
      if (this.hintJump) {
        if (this.hintJump[0] === i) cls.push("hint-from");
        if (this.hintJump[1] === i) cls.push("hint-over");
        if (this.hintJump[2] === i) cls.push("hint-to");
      }
      if (s.solved && s.finalHole === i) cls.push("final");
      c.setAttribute("class", cls.join(" "));
      c.setAttribute("data-hole", String(i));
      c.setAttribute("cx", String(p.x));
      c.setAttribute("cy", String(p.y));
      c.setAttribute("r", String(HOLE_R));
      c.addEventListener("click", () => this.onHoleClick(i));
      c.addEventListener("mousedown", () => this.onHoleDown(i));
      c.addEventListener("mouseup", () => this.onHoleUp(i));
      this.svg.appendChild(c);
    }

    this.statusEl.textContent = this.statusText(s);
  }

  private statusText(s: PlayState): string {
    if (s.solved) {
      return s.won
        ? `Solved: final peg on a finishing hole (${s.history.length} jumps)`
        : "One peg left";
    }
    const parts = [`${s.pegs.size} pegs`, `${s.history.length} jumps made`];
    const a = s.analysis;
    if (a) {
      parts.push(`class ${a.class}`);
      parts.push(a.solvable ? "still solvable" : "not solvable");
      if (a.solvable) parts.push(`${a.winning_jumps.length} winning`);
      parts.push(`via ${a.method}`);
    }
    if (s.dead) {
      parts.push("no jumps left, undo or reset");
    }
    return parts.join(" · ");
  }
}
