// UI translation lookup over a bundle of per-language text maps. The bundle
// ships as a static asset next to the panel and has the same shape the
// collection server serves at /api/translations.

export interface TranslationBundle {
  languages: string[];
  // language code -> {text key -> string}
  texts: Record<string, Record<string, string>>;
}

export class Translator {
  private language: string;

  constructor(
    private readonly bundle: TranslationBundle,
    language?: string,
  ) {
    if (bundle.languages.length === 0) {
      throw new Error("translation bundle declares no languages");
    }
    this.language = language && bundle.languages.includes(language) ? language : bundle.languages[0];
  }

  get current(): string {
    return this.language;
  }

  get languages(): string[] {
    return [...this.bundle.languages];
  }

  setLanguage(code: string): void {
    if (!this.bundle.languages.includes(code)) {
      throw new Error(`unknown language ${code}`);
    }
    this.language = code;
  }

  /** Resolve a UI text key, falling back to the first declared language. */
  text(key: string): string {
    const resolved = this.bundle.texts[this.language]?.[key] ?? this.bundle.texts[this.bundle.languages[0]]?.[key];
    if (resolved === undefined) {
      throw new Error(`missing translation key ${key}`);
    }
    return resolved;
  }

  /**
   * Pick a localized value out of server data such as task names, which may
   * cover a different language set than the UI bundle.
   */
  pick(localized: Record<string, string>, fallback: string): string {
    const exact = localized[this.language];
    if (exact) return exact;
    for (const value of Object.values(localized)) {
      if (value) return value;
    }
    return fallback;
  }
}
