/**
 * Single-page panel over the tracker daemon API.
 *
 * The daemon owns all workflow state; the panel renders whatever phase
 * `GET /state` reports and issues writes only through the documented
 * endpoints. Rendering is a full redraw from local state, so every screen
 * is a pure function of (session, tasks, drafts, notice).
 */

import { DaemonClient, DaemonError } from "./api.js";
import type { RunResult, SessionState, TaskInfo } from "./api.js";
import { Translator } from "./i18n.js";
import { StatePoller } from "./poller.js";
import {
  EXPERIENCE_LEVELS,
  GENDER_OPTIONS,
  surveyPayload,
  validateSurvey,
} from "./validation.js";
import type { SurveyDraft, SurveyErrors } from "./validation.js";

interface Notice {
  textKey: string;
  detail?: string;
  retry?: boolean;
}

function noticeFor(error: unknown): Notice {
  if (error instanceof DaemonError) {
    if (error.kind === "ServerUnreachable") {
      return { textKey: "submit.unreachable", retry: true };
    }
    if (error.kind === "ServerRejected") {
      return { textKey: "submit.rejected", detail: error.detail, retry: true };
    }
    return { textKey: "common.error", detail: error.detail };
  }
  return { textKey: "common.error", detail: String(error) };
}

export class Panel {
  private session: SessionState | null = null;
  private tasks: TaskInfo[] | null = null;
  private busy = false;
  private notice: Notice | null = null;
  private runResult: RunResult | null = null;
  private surveyDraft: SurveyDraft = { gender: "", age: "", country: "", experience: "" };
  private surveyErrors: SurveyErrors = {};
  private stdinDraft = "";
  // remembers the programming language chosen per task card between redraws
  private taskLanguage: Record<string, string> = {};
  readonly poller: StatePoller;

  constructor(
    private readonly root: HTMLElement,
    private readonly client: DaemonClient,
    private readonly translator: Translator,
    pollIntervalMs = 1000,
  ) {
    this.poller = new StatePoller(() => this.refreshState(), pollIntervalMs);
  }

  /** Load initial state, draw the first screen, and begin polling. */
  async start(): Promise<void> {
    try {
      this.session = await this.client.getState();
      await this.ensureTasks();
    } catch (error) {
      this.notice = noticeFor(error);
    }
    this.render();
    this.poller.start();
  }

  stop(): void {
    this.poller.stop();
  }

  private t(key: string): string {
    return this.translator.text(key);
  }

  // tasks are fetched once per page load; language switches rerender from
  // the cached list
  private async ensureTasks(): Promise<void> {
    if (this.tasks === null && this.session !== null && this.session.phase !== "NeedsSurvey") {
      this.tasks = await this.client.getTasks();
    }
  }

  private async refreshState(): Promise<void> {
    const next = await this.client.getState();
    const changed = JSON.stringify(next) !== JSON.stringify(this.session);
    this.session = next;
    await this.ensureTasks();
    if (changed) {
      if (next.phase !== "Solving" && next.phase !== "Submitting") {
        this.runResult = null;
      }
      this.render();
    }
  }

  /** Run one mutating request with every control disabled until it settles. */
  private async mutate(action: () => Promise<void>): Promise<void> {
    if (this.busy) return;
    this.busy = true;
    this.notice = null;
    this.render();
    try {
      await action();
    } catch (error) {
      this.notice = noticeFor(error);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private async onSurveySubmit(): Promise<void> {
    this.surveyErrors = validateSurvey(this.surveyDraft);
    if (Object.keys(this.surveyErrors).length > 0) {
      this.render();
      return;
    }
    await this.mutate(async () => {
      this.session = await this.client.submitSurvey(surveyPayload(this.surveyDraft));
      await this.ensureTasks();
    });
  }

  private async onSelectTask(taskKey: string, language: string): Promise<void> {
    await this.mutate(async () => {
      this.session = await this.client.selectTask(taskKey, language);
      this.runResult = null;
      this.stdinDraft = "";
    });
  }

  private async onRun(): Promise<void> {
    await this.mutate(async () => {
      this.runResult = await this.client.runSolution(this.stdinDraft);
    });
  }

  private async onSubmit(): Promise<void> {
    await this.mutate(async () => {
      await this.client.submitSolution();
      this.session = await this.client.getState();
      this.runResult = null;
      this.stdinDraft = "";
      this.notice = { textKey: "submit.success" };
    });
  }

  private onUiLanguage(code: string): void {
    this.translator.setLanguage(code);
    this.render();
  }

  // --- rendering ---

  render(): void {
    this.root.innerHTML = this.page();
    this.bind();
  }

  private page(): string {
    return `
      <header class="topbar">
        <h1>${esc(this.t("app.title"))}</h1>
        <label class="ui-language">
          <span>${esc(this.t("ui.language"))}</span>
          <select id="ui-language">${this.languageOptions()}</select>
        </label>
      </header>
      <main>${this.screen()}</main>`;
  }

  private languageOptions(): string {
    return this.translator.languages
      .map((code) => {
        const selected = code === this.translator.current ? " selected" : "";
        return `<option value="${esc(code)}"${selected}>${esc(code)}</option>`;
      })
      .join("");
  }

  private screen(): string {
    if (this.session === null) {
      return `<p class="loading">${esc(this.t("common.loading"))}</p>${this.noticeBlock()}`;
    }
    switch (this.session.phase) {
      case "NeedsSurvey":
        return this.surveyScreen();
      case "Idle":
        return this.tasksScreen();
      case "Solving":
      case "Submitting":
        return this.sessionScreen();
      default:
        return this.noticeBlock();
    }
  }

  private surveyScreen(): string {
    const draft = this.surveyDraft;
    const genderOptions = GENDER_OPTIONS.map(
      (value) =>
        `<option value="${value}"${draft.gender === value ? " selected" : ""}>` +
        `${esc(this.t(`gender.${value}`))}</option>`,
    ).join("");
    const experienceOptions = EXPERIENCE_LEVELS.map(
      (value) =>
        `<option value="${value}"${draft.experience === value ? " selected" : ""}>` +
        `${esc(this.t(`experience.${value}`))}</option>`,
    ).join("");
    return `
      <section class="card survey">
        <h2>${esc(this.t("survey.title"))}</h2>
        <p>${esc(this.t("survey.intro"))}</p>
        <form id="survey-form" novalidate>
          <label>
            <span>${esc(this.t("survey.gender"))}</span>
            <select name="gender">
              <option value=""${draft.gender === "" ? " selected" : ""}></option>
              ${genderOptions}
            </select>
          </label>
          ${this.fieldError("gender")}
          <label>
            <span>${esc(this.t("survey.age"))}</span>
            <input name="age" inputmode="numeric" value="${esc(draft.age)}">
          </label>
          ${this.fieldError("age")}
          <label>
            <span>${esc(this.t("survey.country"))}</span>
            <input name="country" maxlength="2" value="${esc(draft.country)}">
          </label>
          ${this.fieldError("country")}
          <label>
            <span>${esc(this.t("survey.experience"))}</span>
            <select name="experience">
              <option value=""${draft.experience === "" ? " selected" : ""}></option>
              ${experienceOptions}
            </select>
          </label>
          ${this.fieldError("experience")}
          <button type="submit"${this.busy ? " disabled" : ""}>${esc(this.t("survey.submit"))}</button>
        </form>
        ${this.noticeBlock()}
      </section>`;
  }

  private fieldError(field: keyof SurveyErrors): string {
    const key = this.surveyErrors[field];
    if (!key) return "";
    return `<p class="field-error" data-field="${field}">${esc(this.t(key))}</p>`;
  }

  private tasksScreen(): string {
    const tasks = this.tasks ?? [];
    const cards = tasks
      .map((task) => {
        const chosen = this.taskLanguage[task.key] ?? task.supportedLanguages[0] ?? "";
        const options = task.supportedLanguages
          .map(
            (language) =>
              `<option value="${esc(language)}"${language === chosen ? " selected" : ""}>` +
              `${esc(language)}</option>`,
          )
          .join("");
        return `
          <li class="task-card" data-task="${esc(task.key)}">
            <h3>${esc(this.translator.pick(task.names, task.key))}</h3>
            <p class="description">${esc(this.translator.pick(task.descriptions, ""))}</p>
            <label>
              <span>${esc(this.t("tasks.language"))}</span>
              <select data-task-language="${esc(task.key)}">${options}</select>
            </label>
            <button class="select-task" data-task="${esc(task.key)}"${this.busy ? " disabled" : ""}>
              ${esc(this.t("tasks.select"))}
            </button>
          </li>`;
      })
      .join("");
    return `
      <section class="card tasks">
        <h2>${esc(this.t("tasks.title"))}</h2>
        ${this.noticeBlock()}
        <ul class="task-list">${cards}</ul>
      </section>`;
  }

  private sessionScreen(): string {
    const session = this.session;
    const active = session?.activeTask ?? null;
    if (active === null) return this.noticeBlock();
    const task = (this.tasks ?? []).find((candidate) => candidate.key === active.taskKey);
    const title = task ? this.translator.pick(task.names, task.key) : active.taskKey;
    const description = task ? this.translator.pick(task.descriptions, "") : "";
    const examples = (task?.examples ?? [])
      .map(
        (example) =>
          `<tr><td><code>${esc(example.input)}</code></td>` +
          `<td><code>${esc(example.output)}</code></td></tr>`,
      )
      .join("");
    const disabled = this.busy || session?.phase === "Submitting" ? " disabled" : "";
    return `
      <section class="card session">
        <h2><span>${esc(this.t("session.title"))}</span> <strong>${esc(title)}</strong></h2>
        <p class="tracking">${esc(this.t("session.tracking"))}</p>
        <p class="draft">
          <span>${esc(this.t("session.draft"))}</span>
          <code id="draft-path">${esc(active.draftFilePath)}</code>
        </p>
        ${description ? `<p class="description">${esc(description)}</p>` : ""}
        ${examples ? `<h3>${esc(this.t("session.examples"))}</h3><table class="examples"><tbody>${examples}</tbody></table>` : ""}
        <label>
          <span>${esc(this.t("session.stdin"))}</span>
          <textarea id="stdin" rows="3">${esc(this.stdinDraft)}</textarea>
        </label>
        <div class="controls">
          <button id="run"${disabled}>${esc(this.t("session.run"))}</button>
          <button id="submit"${disabled}>${esc(this.t("session.submit"))}</button>
        </div>
        ${this.runBlock()}
        ${this.noticeBlock()}
      </section>`;
  }

  private runBlock(): string {
    const result = this.runResult;
    if (result === null) return "";
    return `
      <div class="run-result">
        <p><span>${esc(this.t("session.exit_code"))}</span> <code id="exit-code">${result.exitCode}</code></p>
        <h4>${esc(this.t("session.stdout"))}</h4>
        <pre id="stdout">${esc(result.stdout)}</pre>
        <h4>${esc(this.t("session.stderr"))}</h4>
        <pre id="stderr">${esc(result.stderr)}</pre>
      </div>`;
  }

  private noticeBlock(): string {
    const notice = this.notice;
    if (notice === null) return "";
    const retry = notice.retry
      ? `<button id="retry"${this.busy ? " disabled" : ""}>${esc(this.t("submit.retry"))}</button>`
      : "";
    const detail = notice.detail ? `<code>${esc(notice.detail)}</code>` : "";
    return `
      <div class="notice">
        <span>${esc(this.t(notice.textKey))}</span>
        ${detail}
        ${retry}
      </div>`;
  }

  // --- event wiring ---

  private bind(): void {
    const language = this.root.querySelector<HTMLSelectElement>("#ui-language");
    language?.addEventListener("change", () => this.onUiLanguage(language.value));

    const form = this.root.querySelector<HTMLFormElement>("#survey-form");
    if (form) {
      form.addEventListener("submit", (event) => {
        event.preventDefault();
        void this.onSurveySubmit();
      });
      for (const field of ["gender", "age", "country", "experience"] as const) {
        const input = form.querySelector<HTMLInputElement | HTMLSelectElement>(`[name="${field}"]`);
        input?.addEventListener("input", () => {
          this.surveyDraft[field] = input.value;
        });
        input?.addEventListener("change", () => {
          this.surveyDraft[field] = input.value;
        });
      }
    }

    for (const select of this.root.querySelectorAll<HTMLSelectElement>("[data-task-language]")) {
      select.addEventListener("change", () => {
        this.taskLanguage[select.dataset.taskLanguage ?? ""] = select.value;
      });
    }
    for (const button of this.root.querySelectorAll<HTMLButtonElement>(".select-task")) {
      button.addEventListener("click", () => {
        const taskKey = button.dataset.task ?? "";
        const select = this.root.querySelector<HTMLSelectElement>(
          `[data-task-language="${taskKey}"]`,
        );
        void this.onSelectTask(taskKey, select?.value ?? "");
      });
    }

    const stdin = this.root.querySelector<HTMLTextAreaElement>("#stdin");
    stdin?.addEventListener("input", () => {
      this.stdinDraft = stdin.value;
    });
    this.root.querySelector("#run")?.addEventListener("click", () => void this.onRun());
    this.root.querySelector("#submit")?.addEventListener("click", () => void this.onSubmit());
    this.root.querySelector("#retry")?.addEventListener("click", () => void this.onSubmit());
  }
}

function esc(value: string): string {
  return value
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}
