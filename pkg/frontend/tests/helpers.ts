// Shared test scaffolding: real and sentinel translation bundles, panel
// mounting against a stub, and small waiting utilities.

import { readFileSync } from "node:fs";
import { resolve } from "node:path";
import { DaemonClient } from "../src/api.js";
import { Translator } from "../src/i18n.js";
import type { TranslationBundle } from "../src/i18n.js";
import { Panel } from "../src/panel.js";
import type { DaemonStub } from "./stub.js";

export function realBundle(): TranslationBundle {
  const path = resolve(process.cwd(), "public/translations.json");
  return JSON.parse(readFileSync(path, "utf-8")) as TranslationBundle;
}

/**
 * A bundle whose every text is the marker «key». Rendered output built from
 * it makes bundle-sourced text mechanically distinguishable from anything
 * hard-coded or data-derived.
 */
export function sentinelBundle(): TranslationBundle {
  const base = realBundle();
  const texts: Record<string, Record<string, string>> = {};
  for (const language of base.languages) {
    texts[language] = {};
    for (const key of Object.keys(base.texts[language])) {
      texts[language][key] = `«${key}»`;
    }
  }
  return { languages: base.languages, texts };
}

export interface Mounted {
  panel: Panel;
  root: HTMLElement;
  translator: Translator;
}

/** Mount a fresh panel in the test DOM, pointed at the stub daemon. */
export async function mountPanel(
  stub: DaemonStub,
  options: { bundle?: TranslationBundle; language?: string; pollIntervalMs?: number } = {},
): Promise<Mounted> {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const translator = new Translator(options.bundle ?? realBundle(), options.language);
  const client = new DaemonClient(stub.baseUrl, (input, init) => fetch(input, init));
  // default interval is effectively "never" so tests drive each step themselves
  const panel = new Panel(root, client, translator, options.pollIntervalMs ?? 3_600_000);
  await panel.start();
  return { panel, root, translator };
}

export async function until(check: () => boolean, timeoutMs = 2000): Promise<void> {
  const start = Date.now();
  while (!check()) {
    if (Date.now() - start > timeoutMs) {
      throw new Error("condition not met in time");
    }
    await new Promise((resolve) => setTimeout(resolve, 10));
  }
}

export function textOf(root: HTMLElement, selector: string): string {
  const element = root.querySelector(selector);
  if (element === null) {
    throw new Error(`no element matches ${selector}`);
  }
  return (element.textContent ?? "").trim();
}

export function setValue(
  root: HTMLElement,
  selector: string,
  value: string,
): void {
  const input = root.querySelector<HTMLInputElement | HTMLSelectElement | HTMLTextAreaElement>(selector);
  if (input === null) {
    throw new Error(`no element matches ${selector}`);
  }
  input.value = value;
  input.dispatchEvent(new Event("input", { bubbles: true }));
  input.dispatchEvent(new Event("change", { bubbles: true }));
}

export function click(root: HTMLElement, selector: string): void {
  const element = root.querySelector<HTMLElement>(selector);
  if (element === null) {
    throw new Error(`no element matches ${selector}`);
  }
  element.click();
}
