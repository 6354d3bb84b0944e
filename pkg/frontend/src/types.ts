/** Wire types for the engine service.  The UI has no geometry of its own:
 * everything it knows about a board arrives in a BoardDescriptor. */

export type Jump = readonly [from: number, over: number, to: number];

export interface GroupElement {
  kind: string;
  perm: number[];
}

export interface BoardDescriptor {
  id: string;
  n_holes: number;
  lattice: "square" | "hex";
  holes: [number, number][];
  centre: number | null;
  jumps: [number, number, number][];
  group: GroupElement[];
  display: { rows: number; cols: number; cells: [number, number][] };
}

export interface SymmetryTypeInfo {
  type_id: number;
  order: number;
}

export interface AnalyzeResponse {
  class: string;
  symmetry_type: SymmetryTypeInfo | null;
  finishing_holes: number[];
  solvable: boolean;
  legal_jumps: [number, number, number][];
  winning_jumps: [number, number, number][];
  method: "class" | "store" | "oracle";
}

export interface HintResponse {
  jump?: { from: number; over: number; to: number };
  message?: string;
}

export interface PuzzleRecord {
  board: string;
  class: string;
  code: number;
  pegs: number[];
  n_pegs: number;
  n_jumps: number;
  n_winning_jumps: number;
  hint: [number, number, number];
  symmetry_type: number | null;
  unique_solution: boolean | null;
  source: string;
}
