import { defineConfig } from "vitest/config";

// The stub daemon binds an ephemeral localhost port, so test fetches are
// cross-origin from the blank test page. happy-dom accepts
// fetch.disableSameOriginPolicy for this; vitest's bundled option types lag
// behind, hence the indirection through a variable.
const happyDOM: Record<string, unknown> = {
  settings: { fetch: { disableSameOriginPolicy: true } },
};

export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: { happyDOM },
    include: ["tests/**/*.test.ts"],
  },
});
