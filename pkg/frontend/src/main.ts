/** Entry point: connect to the service, list boards and puzzles, play. */

import { ApiClient } from "./api.js";
import { PlayerUI } from "./ui.js";
import type { BoardDescriptor, PuzzleRecord } from "./types.js";

function apiBase(): string {
  const q = new URLSearchParams(window.location.search).get("api");
  return (q ?? "http://127.0.0.1:8000").replace(/\/$/, "");
}

function option(select: HTMLSelectElement, value: string, label: string): void {
  const o = document.createElement("option");
  o.value = value;
  o.textContent = label;
  select.appendChild(o);
}

async function start(): Promise<void> {
  const picker = document.getElementById("picker") as HTMLElement;
  const playerRoot = document.getElementById("player") as HTMLElement;
  const api = new ApiClient(apiBase());
  const ui = new PlayerUI(playerRoot, api);

  const boardSel = document.createElement("select");
  const puzzleSel = document.createElement("select");
  picker.append("board ", boardSel, " puzzle ", puzzleSel);

  let boards: BoardDescriptor[];
  let puzzles: PuzzleRecord[];
  try {
    [boards, puzzles] = await Promise.all([api.boards(), api.puzzles()]);
  } catch (err) {
    picker.textContent = `service unreachable at ${api.base}: ${
      err instanceof Error ? err.message : String(err)
    }; start it with "pegkit serve --puzzles DIR" or pass ?api=URL`;
    return;
  }

  const descs = new Map(boards.map((b) => [b.id, b]));
  for (const b of boards) {
    option(boardSel, b.id, `${b.id} (${b.n_holes} holes)`);
  }

  const fillPuzzles = (): void => {
    while (puzzleSel.firstChild) puzzleSel.removeChild(puzzleSel.firstChild);
    const here = puzzles.filter((p) => p.board === boardSel.value);
    for (let k = 0; k < here.length; k++) {
      const p = here[k];
      if (!p) continue;
      option(puzzleSel, String(k), `${p.n_pegs} pegs, ${p.n_jumps} jumps (${p.class})`);
    }
    if (here.length === 0) {
      option(puzzleSel, "", "no exported puzzles");
    }
    loadSelected();
  };

  const loadSelected = (): void => {
    const here = puzzles.filter((p) => p.board === boardSel.value);
    const p = here[Number(puzzleSel.value)];
    const desc = descs.get(boardSel.value);
    if (p && desc) ui.loadPuzzle(p, desc);
  };

  boardSel.addEventListener("change", fillPuzzles);
  puzzleSel.addEventListener("change", loadSelected);
  const english = boards.find((b) => b.id === "english33");
  boardSel.value = english ? english.id : (boards[0]?.id ?? "");
  fillPuzzles();
}

void start();
