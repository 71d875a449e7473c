/**
 * Secondary panels: rule palette toggles, demonstration playback over
 * exported frames, export downloads, and the on-screen symbol keypad
 * for formula entry.
 */

import { FrameRow, SessionView } from "./api.js";
import { renderFrame } from "./render.js";

export const PALETTE_RULES = [
  "∧I", "∧E", "∨I", "∨E", "→I", "→E", "¬I", "¬E", "⊥E", "¬¬E",
  "∀I", "∀E", "∃I", "∃E", "=I", "=E", "Re", "Ind", "Ax",
];

export const SYMBOLS = ["¬", "∧", "∨", "→", "∀", "∃", "⊥"];

export function palettePanel(
  view: SessionView,
  onToggle: (rule: string, on: boolean) => void,
): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "palette-panel";
  for (const rule of PALETTE_RULES) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.dataset.rule = rule;
    box.checked = view.palette.includes(rule);
    box.addEventListener("change", () => onToggle(rule, box.checked));
    label.appendChild(box);
    label.appendChild(document.createTextNode(rule));
    panel.appendChild(label);
  }
  return panel;
}

export interface Playback {
  element: HTMLElement;
  /** Current frame index, for tests and the position indicator. */
  position(): number;
  next(): void;
  previous(): void;
}

export function playbackControls(frames: FrameRow[][]): Playback {
  const element = document.createElement("div");
  element.className = "playback";
  const stage = document.createElement("div");
  stage.className = "playback-stage";
  const counter = document.createElement("span");
  counter.className = "playback-counter";
  let index = 0;

  const update = () => {
    stage.replaceChildren(renderFrame(frames[index]));
    counter.textContent = `${index + 1} / ${frames.length}`;
  };

  const back = document.createElement("button");
  back.textContent = "◀";
  back.addEventListener("click", () => previous());
  const forward = document.createElement("button");
  forward.textContent = "▶";
  forward.addEventListener("click", () => next());

  function next(): void {
    if (index < frames.length - 1) {
      index++;
      update();
    }
  }
  function previous(): void {
    if (index > 0) {
      index--;
      update();
    }
  }

  element.append(back, counter, forward, stage);
  update();
  return { element, position: () => index, next, previous };
}

export function exportMenu(onExport: (format: string) => void): HTMLElement {
  const menu = document.createElement("div");
  menu.className = "export-menu";
  for (const format of ["latex", "text", "frames", "ndp"]) {
    const button = document.createElement("button");
    button.dataset.format = format;
    button.textContent = `export ${format}`;
    button.addEventListener("click", () => onExport(format));
    menu.appendChild(button);
  }
  return menu;
}

/** Keypad that inserts connective characters into a text field. */
export function symbolKeypad(target: HTMLInputElement): HTMLElement {
  const pad = document.createElement("div");
  pad.className = "symbol-keypad";
  for (const symbol of SYMBOLS) {
    const key = document.createElement("button");
    key.textContent = symbol;
    key.addEventListener("click", () => {
      const at = target.selectionStart ?? target.value.length;
      target.value = target.value.slice(0, at) + symbol + target.value.slice(at);
      target.focus();
      target.selectionStart = target.selectionEnd = at + symbol.length;
    });
    pad.appendChild(key);
  }
  return pad;
}
