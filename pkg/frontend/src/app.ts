// The puzzle explorer. One session per page; every state change round-trips
// through the service, and the DOM is rebuilt from the response (the client
// performs no group arithmetic of its own).

import { ApiError, PuzzleApi, type SessionState } from "./api.js";
import { renderBoard } from "./board.js";

export class PuzzleApp {
  readonly api: PuzzleApi;
  private state: SessionState | null = null;
  private preview: SessionState | null = null;
  private readonly root: HTMLElement;
  private svg!: SVGSVGElement;
  private designSelect!: HTMLSelectElement;
  private statusBox!: HTMLElement;
  private historyBox!: HTMLElement;
  private hintBox!: HTMLElement;
  private undoButton!: HTMLButtonElement;

  constructor(root: HTMLElement, baseUrl: string) {
    this.root = root;
    this.api = new PuzzleApi(baseUrl);
    this.buildSkeleton();
  }

  private buildSkeleton(): void {
    this.root.innerHTML = "";

    const controls = document.createElement("div");
    controls.className = "controls";
    this.designSelect = document.createElement("select");
    this.designSelect.id = "design-select";
    controls.appendChild(this.designSelect);

    const newButton = document.createElement("button");
    newButton.id = "new-session";
    newButton.textContent = "new game";
    newButton.addEventListener("click", () => {
      void this.start(this.designSelect.value);
    });
    controls.appendChild(newButton);

    this.undoButton = document.createElement("button");
    this.undoButton.id = "undo";
    this.undoButton.textContent = "undo";
    this.undoButton.addEventListener("click", () => {
      void this.undo();
    });
    controls.appendChild(this.undoButton);
    this.root.appendChild(controls);

    this.hintBox = document.createElement("div");
    this.hintBox.id = "hint";
    this.hintBox.className = "hint";
    this.root.appendChild(this.hintBox);

    this.svg = document.createElementNS("http://www.w3.org/2000/svg", "svg");
    this.svg.id = "board";
    this.root.appendChild(this.svg);

    this.statusBox = document.createElement("div");
    this.statusBox.id = "status";
    this.root.appendChild(this.statusBox);

    this.historyBox = document.createElement("div");
    this.historyBox.id = "history";
    this.root.appendChild(this.historyBox);
  }

  async init(): Promise<void> {
    const { designs } = await this.api.listDesigns();
    this.designSelect.innerHTML = "";
    for (const design of designs) {
      const option = document.createElement("option");
      option.value = design.label;
      option.textContent = `${design.label} (${design.n} points)`;
      this.designSelect.appendChild(option);
    }
  }

  async start(design: string): Promise<void> {
    this.state = await this.api.createSession(design);
    this.preview = null;
    this.hintBox.textContent = "";
    this.render();
  }

  get currentState(): SessionState | null {
    return this.state;
  }

  /** Click handler: commit the move, or surface a non-blocking hint. */
  async clickPoint(point: number): Promise<void> {
    if (!this.state) return;
    try {
      this.state = await this.api.move(this.state.session, point);
      this.preview = null;
      this.hintBox.textContent = "";
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        const reason = String(error.payload["reason"] ?? "illegal move");
        this.hintBox.textContent = `illegal move: ${reason}`;
      } else {
        throw error;
      }
    }
    this.render();
  }

  /** Hover handler: ghost the post-move arrangement without committing. */
  async previewPoint(point: number): Promise<void> {
    if (!this.state) return;
    if (!this.state.legal_moves.includes(point)) {
      this.preview = null;
      this.render();
      return;
    }
    try {
      this.preview = await this.api.preview(this.state.session, point);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        this.preview = null;
      } else {
        throw error;
      }
    }
    this.render();
  }

  clearPreview(): void {
    if (this.preview) {
      this.preview = null;
      this.render();
    }
  }

  async undo(): Promise<void> {
    if (!this.state) return;
    this.state = await this.api.undo(this.state.session);
    this.preview = null;
    this.render();
  }

  private render(): void {
    const state = this.state;
    if (!state) return;
    renderBoard(this.svg, state, this.preview, {
      onPointClick: (point) => void this.clickPoint(point),
      onPointEnter: (point) => void this.previewPoint(point),
      onPointLeave: () => this.clearPreview(),
    });

    const parts: string[] = [];
    parts.push(`design: ${state.design}`);
    parts.push(`hole at p${state.hole}`);
    if (state.is_home) {
      parts.push(state.is_identity ? "walk result: identity" : "walk result: nontrivial");
      parts.push(
        `in hole stabilizer: ${state.in_hole_stabilizer ? "yes" : "no"}`,
      );
      parts.push(`cycles: ${state.cycles}`);
    } else {
      parts.push("hole away from home");
    }
    this.statusBox.textContent = parts.join(" | ");

    this.historyBox.textContent =
      state.history.length === 0
        ? "no moves yet"
        : `walk: ${state.base_point} -> ${state.history.join(" -> ")}`;
    this.undoButton.disabled = state.history.length === 0;
  }
}

export async function mount(root: HTMLElement, baseUrl: string): Promise<PuzzleApp> {
  const app = new PuzzleApp(root, baseUrl);
  await app.init();
  await app.start("pg23");
  return app;
}
