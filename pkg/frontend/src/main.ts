// Browser entry point: fetch the translation asset served next to this
// bundle, then mount the panel against the daemon on the same origin.

import { DaemonClient } from "./api.js";
import { Translator } from "./i18n.js";
import type { TranslationBundle } from "./i18n.js";
import { Panel } from "./panel.js";

async function boot(): Promise<void> {
  const response = await fetch(new URL("translations.json", document.baseURI).toString());
  const bundle = (await response.json()) as TranslationBundle;
  const translator = new Translator(bundle, navigator.language.slice(0, 2));
  document.title = translator.text("app.title");

  const root = document.getElementById("app");
  if (root === null) {
    throw new Error("missing #app element");
  }
  const panel = new Panel(root, new DaemonClient(""), translator);
  await panel.start();
}

void boot();
