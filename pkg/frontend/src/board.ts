// SVG board rendering. Points sit on a circle; the 13-point plane gets a
// curated ordering and its lines drawn as arcs so the quadruples are
// readable. The rendered picture is a pure function of the last server
// state (plus an optional preview overlay).

import type { SessionState } from "./api.js";

export interface Layout {
  positions: { x: number; y: number }[];
  drawLines: boolean;
}

const SIZE = 520;
const CENTER = SIZE / 2;
const RADIUS = SIZE / 2 - 56;

// Ring order chosen so that each line of the order-3 plane stays visually
// grouped; any fixed order works, this one just reads well.
const PLANE_ORDER = [0, 4, 7, 10, 1, 5, 8, 11, 2, 6, 9, 12, 3];

export function layoutFor(state: SessionState): Layout {
  const n = state.n;
  const order =
    state.design === "pg23" ? PLANE_ORDER : Array.from({ length: n }, (_, i) => i);
  const positions = new Array(n);
  order.forEach((point, slot) => {
    const angle = (2 * Math.PI * slot) / n - Math.PI / 2;
    positions[point] = {
      x: CENTER + RADIUS * Math.cos(angle),
      y: CENTER + RADIUS * Math.sin(angle),
    };
  });
  const drawLines = state.design === "pg23" || state.blocks.length <= 16;
  return { positions, drawLines };
}

function lineArc(points: { x: number; y: number }[]): string {
  // a smooth curve through the block's points, bowed toward the center so
  // concurrent lines stay distinguishable
  const sorted = [...points];
  let d = `M ${sorted[0].x} ${sorted[0].y}`;
  for (let i = 1; i < sorted.length; i++) {
    const a = sorted[i - 1];
    const b = sorted[i];
    const mx = (a.x + b.x) / 2;
    const my = (a.y + b.y) / 2;
    const cx = mx + (CENTER - mx) * 0.35;
    const cy = my + (CENTER - my) * 0.35;
    d += ` Q ${cx} ${cy} ${b.x} ${b.y}`;
  }
  return d;
}

export interface RenderHooks {
  onPointClick: (point: number) => void;
  onPointEnter: (point: number) => void;
  onPointLeave: () => void;
}

export function renderBoard(
  svg: SVGSVGElement,
  state: SessionState,
  preview: SessionState | null,
  hooks: RenderHooks,
): void {
  const layout = layoutFor(state);
  svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
  while (svg.firstChild) {
    svg.removeChild(svg.firstChild);
  }
  const ns = "http://www.w3.org/2000/svg";

  if (layout.drawLines) {
    for (const block of state.blocks) {
      const path = document.createElementNS(ns, "path");
      path.setAttribute("d", lineArc(block.map((p) => layout.positions[p])));
      path.setAttribute("class", "line-arc");
      path.setAttribute("fill", "none");
      svg.appendChild(path);
    }
  }

  const legal = new Set(state.legal_moves);
  const shown = preview ?? state;
  for (let point = 0; point < state.n; point++) {
    const pos = layout.positions[point];
    const group = document.createElementNS(ns, "g");
    group.setAttribute("class", "point-group");
    group.setAttribute("data-point", String(point));

    const circle = document.createElementNS(ns, "circle");
    circle.setAttribute("cx", String(pos.x));
    circle.setAttribute("cy", String(pos.y));
    circle.setAttribute("r", "17");
    const classes = ["point"];
    if (point === state.hole) classes.push("hole");
    if (legal.has(point)) classes.push("legal");
    if (preview && preview.permutation.images[point] !== state.permutation.images[point]) {
      classes.push("preview-changed");
    }
    circle.setAttribute("class", classes.join(" "));
    group.appendChild(circle);

    // counters: the label shows which counter currently sits on the point;
    // counter c sits on point p exactly when the permutation maps c to p
    const label = document.createElementNS(ns, "text");
    label.setAttribute("x", String(pos.x));
    label.setAttribute("y", String(pos.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", preview ? "counter ghost" : "counter");
    const occupant = shown.permutation.images.indexOf(point);
    label.textContent = point === shown.hole ? "" : String(occupant);
    group.appendChild(label);

    const name = document.createElementNS(ns, "text");
    name.setAttribute("x", String(pos.x));
    name.setAttribute("y", String(pos.y - 22));
    name.setAttribute("text-anchor", "middle");
    name.setAttribute("class", "point-name");
    name.textContent = `p${point}`;
    group.appendChild(name);

    group.addEventListener("click", () => hooks.onPointClick(point));
    group.addEventListener("mouseenter", () => hooks.onPointEnter(point));
    group.addEventListener("mouseleave", () => hooks.onPointLeave());
    svg.appendChild(group);
  }
}
