// Scripted browser session against the live service: a closed walk on the
// 13-point plane, hover previews that never mutate the session, and the
// illegal-move hint.

import { beforeEach, describe, expect, inject, it, vi } from "vitest";
import { mount, PuzzleApp } from "../src/app.js";
import { PuzzleApi } from "../src/api.js";

const baseUrl = inject("baseUrl");

function click(element: Element): void {
  element.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

function pointGroup(point: number): Element {
  const group = document.querySelector(`g[data-point="${point}"]`);
  if (!group) throw new Error(`no rendered point ${point}`);
  return group;
}

function statusText(): string {
  return document.getElementById("status")?.textContent ?? "";
}

async function settle(predicate: () => boolean): Promise<void> {
  await vi.waitFor(() => {
    if (!predicate()) throw new Error("not yet");
  });
}

describe("puzzle explorer on the 13-point plane", () => {
  let app: PuzzleApp;

  beforeEach(async () => {
    document.body.innerHTML = '<div id="app"></div>';
    app = await mount(document.getElementById("app")!, baseUrl);
  });

  it("lists the catalog and starts at the identity", () => {
    const select = document.getElementById("design-select") as HTMLSelectElement;
    const labels = Array.from(select.options).map((o) => o.value);
    expect(labels).toContain("pg23");
    expect(labels.length).toBeGreaterThanOrEqual(5);
    const state = app.currentState!;
    expect(state.design).toBe("pg23");
    expect(state.is_home).toBe(true);
    expect(state.is_identity).toBe(true);
    expect(statusText()).toContain("in hole stabilizer: yes");
  });

  it("plays a closed walk and reports stabilizer membership", async () => {
    // pick a triangle through the hole that does not lie inside a line, so
    // the walk is a nontrivial stabilizer element
    const blocks = app.currentState!.blocks;
    let a = 0;
    let b = 0;
    outer: for (a = 1; a < 13; a++) {
      for (b = a + 1; b < 13; b++) {
        if (!blocks.some((blk) => [0, a, b].every((p) => blk.includes(p)))) {
          break outer;
        }
      }
    }
    click(pointGroup(a));
    await settle(() => app.currentState!.hole === a);
    click(pointGroup(b));
    await settle(() => app.currentState!.hole === b);
    click(pointGroup(0));
    await settle(() => app.currentState!.hole === 0);

    const state = app.currentState!;
    expect(state.history).toEqual([a, b, 0]);
    expect(state.is_home).toBe(true);
    expect(state.in_hole_stabilizer).toBe(true);
    expect(statusText()).toContain("in hole stabilizer: yes");
    // a closed triangle over a non-line triple moves counters
    expect(state.is_identity).toBe(false);
    expect(document.getElementById("history")!.textContent).toContain(
      `0 -> ${a} -> ${b} -> 0`,
    );
  });

  it("full-line walks return to the identity", async () => {
    // the line through 0 in the canonical plane is {0, 1, 4, 7}
    const state0 = app.currentState!;
    const line = state0.blocks.find((b) => b.includes(0))!;
    const [a, b, c] = line.filter((p) => p !== 0);
    for (const point of [a, b, c, 0]) {
      click(pointGroup(point));
      await settle(() => app.currentState!.hole === point);
    }
    const state = app.currentState!;
    expect(state.is_home).toBe(true);
    expect(state.is_identity).toBe(true);
    expect(statusText()).toContain("walk result: identity");
    expect(statusText()).toContain("cycles: ()");
  });

  it("previews without mutating the session", async () => {
    const target = app.currentState!.legal_moves[0];
    pointGroup(target).dispatchEvent(new MouseEvent("mouseenter", { bubbles: true }));
    await settle(() => document.querySelector("text.counter.ghost") !== null);

    // the server session is untouched while the ghost overlay shows
    const api = new PuzzleApi(baseUrl);
    const serverState = await api.getState(app.currentState!.session);
    expect(serverState.history).toEqual([]);
    expect(serverState.is_identity).toBe(true);
    expect(app.currentState!.history).toEqual([]);

    pointGroup(target).dispatchEvent(new MouseEvent("mouseleave", { bubbles: true }));
    await settle(() => document.querySelector("text.counter.ghost") === null);

    // committing the previewed move lands on exactly the previewed state
    click(pointGroup(target));
    await settle(() => app.currentState!.hole === target);
    expect(app.currentState!.history).toEqual([target]);
  });

  it("shows a non-blocking hint on an illegal move", async () => {
    const hole = app.currentState!.hole;
    click(pointGroup(hole));
    await settle(() =>
      (document.getElementById("hint")?.textContent ?? "").includes("illegal move"),
    );
    // nothing committed, the session still answers
    expect(app.currentState!.history).toEqual([]);
    const legal = app.currentState!.legal_moves[0];
    click(pointGroup(legal));
    await settle(() => app.currentState!.hole === legal);
    expect(document.getElementById("hint")!.textContent).toBe("");
  });

  it("undo returns to the previous board", async () => {
    click(pointGroup(3));
    await settle(() => app.currentState!.hole === 3);
    click(pointGroup(7));
    await settle(() => app.currentState!.hole === 7);
    click(document.getElementById("undo")!);
    await settle(() => app.currentState!.history.length === 1);
    expect(app.currentState!.hole).toBe(3);
    click(document.getElementById("undo")!);
    await settle(() => app.currentState!.history.length === 0);
    expect(app.currentState!.is_identity).toBe(true);
  });
});

describe("other catalog designs", () => {
  it("plays the coupled-pairs design with its circle layout", async () => {
    document.body.innerHTML = '<div id="app"></div>';
    const app = await mount(document.getElementById("app")!, baseUrl);
    await app.start("pairs:3");
    const state = app.currentState!;
    expect(state.n).toBe(6);
    expect(state.blocks.length).toBe(3);
    click(pointGroup(2));
    await settle(() => app.currentState!.hole === 2);
    expect(app.currentState!.history).toEqual([2]);
  });
});
