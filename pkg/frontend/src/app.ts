/**
 * Application shell: wires the proof panel, rule buttons, palette,
 * exports and playback to the session API.  All state lives in the last
 * SessionView; every command simply replaces it.
 */

import { ApplicableRule, SessionApi, SessionApiError, SessionView } from "./api.js";
import { exportMenu, palettePanel, playbackControls, symbolKeypad } from "./controls.js";
import { renderProof, renderRuleButtons } from "./render.js";

export type Mode = "editable" | "demo";

export class App {
  view: SessionView | null = null;
  lastError: string | null = null;
  hint: string | null = null;

  constructor(
    readonly api: SessionApi,
    readonly root: HTMLElement,
    readonly mode: Mode = "editable",
    readonly prompt: (message: string) => string | null = (m) => window.prompt(m),
  ) {}

  async start(premises: string[], conclusion: string, system: string): Promise<void> {
    await this.command(() => this.api.createSession(premises, conclusion, system));
  }

  /** Current goal creation, straight from the view's flags. */
  private currentGoal(): number | null {
    const row = this.view?.rows.find((r) => r.flags.currentGoal);
    return row ? row.creation : null;
  }

  /**
   * A click selects the line as goal when it is unjustified, otherwise
   * as resource — so an elimination is two clicks: line, then rule.
   */
  async clickLine(creation: number): Promise<void> {
    if (!this.view || this.mode === "demo") {
      return;
    }
    const row = this.view.rows.find((r) => r.creation === creation);
    if (!row) {
      return;
    }
    if (row.status === "Goal") {
      await this.command(() => this.api.selectGoal(this.view!.sessionId, creation));
    } else if (this.currentGoal() === null) {
      this.hint = "select a goal first";
      this.redraw();
    } else {
      await this.command(() => this.api.selectResource(this.view!.sessionId, creation));
    }
  }

  async applyRule(item: ApplicableRule): Promise<void> {
    const args: { side?: string; witness?: string } = {};
    if (item.side) {
      args.side = item.side;
    }
    if (item.needs.includes("witness")) {
      const witness = this.prompt("witness term");
      if (witness === null) {
        return;
      }
      args.witness = witness;
    }
    await this.command(() => this.api.apply(this.view!.sessionId, item.rule, args));
  }

  async command(send: () => Promise<SessionView>): Promise<void> {
    if (this.api.busy) {
      return; // single in-flight request; buttons are disabled anyway
    }
    try {
      this.view = await send();
      this.lastError = null;
      this.hint = null;
    } catch (err) {
      if (err instanceof SessionApiError) {
        this.lastError = `${err.error.code}: ${err.error.message}`;
      } else {
        throw err;
      }
    }
    this.redraw();
  }

  redraw(): void {
    if (!this.view) {
      return;
    }
    const view = this.view;
    this.root.replaceChildren();

    this.root.appendChild(
      renderProof(view, { onLineClick: (creation) => void this.clickLine(creation) }),
    );

    if (this.mode === "demo") {
      void this.api.frames(view.sessionId).then(({ frames }) => {
        this.root.appendChild(playbackControls(frames).element);
      });
    } else {
      this.root.appendChild(
        renderRuleButtons(view, (rule) => {
          const item = view.applicable.find((x) => x.rule === rule);
          if (item) {
            void this.applyRule(item);
          }
        }),
      );
      this.root.appendChild(
        palettePanel(view, (rule, on) =>
          void this.command(() => this.api.setPalette(view.sessionId, rule, on)),
        ),
      );
      const history = document.createElement("div");
      history.className = "history";
      for (const [label, send] of [
        ["undo", () => this.api.undo(view.sessionId)],
        ["redo", () => this.api.redo(view.sessionId)],
        ["magic", () => this.api.magic(view.sessionId)],
      ] as const) {
        const button = document.createElement("button");
        button.textContent = label;
        button.addEventListener("click", () => void this.command(send));
        history.appendChild(button);
      }
      this.root.appendChild(history);
    }

    this.root.appendChild(
      exportMenu((format) => void this.download(format)),
    );

    if (this.lastError) {
      const toast = document.createElement("div");
      toast.className = "error-toast";
      toast.textContent = this.lastError;
      this.root.appendChild(toast);
    }
    if (this.hint) {
      const hintEl = document.createElement("div");
      hintEl.className = "hint";
      hintEl.textContent = this.hint;
      this.root.appendChild(hintEl);
    }
  }

  async download(format: string): Promise<void> {
    if (!this.view) {
      return;
    }
    const body = await this.api.exportBody(this.view.sessionId, format);
    const blob = new Blob([body], { type: "text/plain" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = `proof.${format === "latex" ? "tex" : format === "ndp" ? "ndp" : "txt"}`;
    link.click();
    URL.revokeObjectURL(link.href);
  }
}

/** Entry point for index.html: sequent form plus the app shell. */
export function bootstrap(root: HTMLElement, api = new SessionApi()): void {
  const form = document.createElement("div");
  form.className = "sequent-form";
  const premisesInput = document.createElement("input");
  premisesInput.placeholder = "premises, comma separated";
  const conclusionInput = document.createElement("input");
  conclusionInput.placeholder = "conclusion";
  const systemSelect = document.createElement("select");
  for (const name of ["NJ", "NK", "PA"]) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    systemSelect.appendChild(option);
  }
  const startButton = document.createElement("button");
  startButton.textContent = "start";

  const panel = document.createElement("div");
  const app = new App(api, panel);
  startButton.addEventListener("click", () => {
    const premises = premisesInput.value
      .split(",")
      .map((s) => s.trim())
      .filter((s) => s.length > 0);
    void app.start(premises, conclusionInput.value, systemSelect.value);
  });

  form.append(
    premisesInput,
    symbolKeypad(premisesInput),
    conclusionInput,
    symbolKeypad(conclusionInput),
    systemSelect,
    startButton,
  );
  root.append(form, panel);
}
