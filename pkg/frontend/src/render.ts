/**
 * Proof panel rendering: rows with scope bars, creation numbers and
 * justifications, colored per the interaction model — current goal
 * green, current resource red, out-of-scope lines dimmed to 40%.
 */

import { FrameRow, ProofRow, SessionView } from "./api.js";

export const GOAL_COLOR = "#1a7f37";
export const RESOURCE_COLOR = "#cf222e";
export const OUT_OF_SCOPE_OPACITY = "0.4";

export interface RenderHandlers {
  onLineClick?: (creation: number) => void;
}

function scopeBars(depth: number, opens: number): string {
  const bars = "│ ".repeat(opens > 0 ? depth - 1 : depth);
  return opens > 0 ? bars + "┌─" : bars;
}

function rowElement(row: ProofRow, handlers: RenderHandlers): HTMLElement {
  const el = document.createElement("div");
  el.className = "proof-row";
  el.dataset.creation = String(row.creation);
  el.dataset.status = row.status;

  const bars = document.createElement("span");
  bars.className = "scope";
  bars.textContent = scopeBars(row.depth, row.boxOpens);
  el.appendChild(bars);

  const body = document.createElement("span");
  body.className = "formula";
  body.textContent = `${row.creation}. ${row.formulaUnicode}`;
  el.appendChild(body);

  const just = document.createElement("span");
  just.className = "justification";
  just.textContent = row.justification;
  el.appendChild(just);

  if (row.flags.currentGoal) {
    el.classList.add("current-goal");
    el.style.color = GOAL_COLOR;
  }
  if (row.flags.currentResource) {
    el.classList.add("current-resource");
    el.style.color = RESOURCE_COLOR;
  }
  if (row.flags.outOfScope) {
    el.classList.add("out-of-scope");
    el.style.opacity = OUT_OF_SCOPE_OPACITY;
  }
  if (handlers.onLineClick) {
    el.addEventListener("click", () => handlers.onLineClick!(row.creation));
  }
  return el;
}

function closingRule(depth: number): HTMLElement {
  const el = document.createElement("div");
  el.className = "proof-row box-close";
  el.textContent = "│ ".repeat(depth - 1) + "├────";
  return el;
}

export function renderProof(view: SessionView, handlers: RenderHandlers = {}): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "proof-panel";
  for (const row of view.rows) {
    panel.appendChild(rowElement(row, handlers));
    for (let i = 0; i < row.boxCloses; i++) {
      panel.appendChild(closingRule(row.depth - i));
    }
  }
  if (view.complete) {
    const banner = document.createElement("div");
    banner.className = "complete-banner";
    banner.textContent = "Complete";
    panel.appendChild(banner);
  }
  return panel;
}

/** Playback frames reuse the proof row layout without selection state. */
export function renderFrame(rows: FrameRow[]): HTMLElement {
  const view: SessionView = {
    sessionId: "",
    system: "",
    palette: [],
    complete: false,
    rows: rows.map((r) => ({
      ...r,
      formulaPrefix: "",
      status: r.justification ? "Justified" : "Goal",
      flags: { currentGoal: false, currentResource: false, outOfScope: false },
    })),
    applicable: [],
  };
  return renderProof(view);
}

export function renderRuleButtons(
  view: SessionView,
  onApply: (rule: string, side?: string) => void,
): HTMLElement {
  const bar = document.createElement("div");
  bar.className = "rule-buttons";
  for (const item of view.applicable) {
    const button = document.createElement("button");
    button.className = "rule-button";
    button.dataset.rule = item.rule;
    if (item.side) {
      button.dataset.side = item.side;
    }
    button.textContent = item.side ? `${item.rule} (${item.side})` : item.rule;
    button.addEventListener("click", () => onApply(item.rule, item.side));
    bar.appendChild(button);
  }
  return bar;
}
