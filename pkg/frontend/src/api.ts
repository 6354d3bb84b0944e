/** Typed client for the engine service.  At most one analysis request is
 * in flight; a newer one aborts the older. */

import type {
  AnalyzeResponse,
  BoardDescriptor,
  HintResponse,
  Jump,
  PuzzleRecord,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

export class ApiClient {
  private analyzeController: AbortController | null = null;

  constructor(
    readonly base: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(
    path: string,
    init?: RequestInit,
  ): Promise<T> {
    const resp = await this.fetchFn(this.base + path, init);
    if (!resp.ok) {
      let detail = resp.statusText;
      try {
        const body = (await resp.json()) as { detail?: unknown };
        if (body && body.detail !== undefined) detail = String(body.detail);
      } catch {
        // keep the status text
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  private post<T>(path: string, body: unknown, signal?: AbortSignal): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
      signal,
    });
  }

  boards(): Promise<BoardDescriptor[]> {
    return this.request<BoardDescriptor[]>("/boards");
  }

  puzzles(board?: string, n?: number): Promise<PuzzleRecord[]> {
    const q = new URLSearchParams();
    if (board !== undefined) q.set("board", board);
    if (n !== undefined) q.set("n", String(n));
    const qs = q.toString();
    return this.request<PuzzleRecord[]>(qs ? `/puzzles?${qs}` : "/puzzles");
  }

  /** Analyze a position; any previous analyze still in flight is aborted
   * (its promise rejects with an AbortError, see isAbort). */
  analyze(board: string, pegs: number[]): Promise<AnalyzeResponse> {
    this.analyzeController?.abort();
    const controller = new AbortController();
    this.analyzeController = controller;
    return this.post<AnalyzeResponse>(
      "/analyze",
      { board, pegs },
      controller.signal,
    ).finally(() => {
      if (this.analyzeController === controller) {
        this.analyzeController = null;
      }
    });
  }

  async hint(board: string, pegs: number[]): Promise<Jump | string> {
    const resp = await this.post<HintResponse>("/hint", { board, pegs });
    if (resp.jump) {
      return [resp.jump.from, resp.jump.over, resp.jump.to];
    }
    return resp.message ?? "no winning jump";
  }
}
