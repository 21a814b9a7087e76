// Typed client for the puzzle service. All mathematics stays server-side;
// the client only ships intents and renders the returned state.

export interface DesignSummary {
  label: string;
  n: number;
  blocks: number;
}

export interface PermutationJson {
  degree: number;
  images: number[];
}

export interface SessionState {
  session: string;
  design: string;
  n: number;
  blocks: number[][];
  base_point: number;
  hole: number;
  history: number[];
  permutation: PermutationJson;
  cycles: string;
  legal_moves: number[];
  is_home: boolean;
  is_identity: boolean;
  in_hole_stabilizer: boolean | null;
}

export interface IllegalMove {
  error: string;
  reason: string;
  hole: number;
  point: number;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: Record<string, unknown>,
  ) {
    super(`api error ${status}`);
  }
}

export class PuzzleApi {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new ApiError(response.status, payload);
    }
    return payload as T;
  }

  listDesigns(): Promise<{ designs: DesignSummary[] }> {
    return this.request("GET", "/designs");
  }

  createSession(design: string): Promise<SessionState> {
    return this.request("POST", "/session", { design });
  }

  getState(sessionId: string): Promise<SessionState> {
    return this.request("GET", `/session/${sessionId}`);
  }

  move(sessionId: string, point: number): Promise<SessionState> {
    return this.request("POST", `/session/${sessionId}/move`, { point });
  }

  undo(sessionId: string): Promise<SessionState> {
    return this.request("POST", `/session/${sessionId}/undo`);
  }

  preview(sessionId: string, point: number): Promise<SessionState> {
    return this.request("GET", `/session/${sessionId}/preview?point=${point}`);
  }
}
