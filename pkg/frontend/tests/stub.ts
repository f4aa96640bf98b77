// In-process daemon stand-in: serves scripted JSON responses and logs every
// request, so tests can assert exactly which writes the panel performed.

import { createServer } from "node:http";
import type { IncomingMessage, Server, ServerResponse } from "node:http";
import type { SessionState, TaskInfo } from "../src/api.js";

export interface LoggedRequest {
  method: string;
  path: string;
  body: unknown;
}

interface ScriptedResponse {
  status: number;
  body: unknown;
}

export class DaemonStub {
  readonly log: LoggedRequest[] = [];
  private readonly routes = new Map<string, ScriptedResponse[]>();
  private server?: Server;
  baseUrl = "";

  /**
   * Script a response for `METHOD path`. Repeated calls queue up responses;
   * the last one keeps repeating once the queue drains.
   */
  respond(method: string, path: string, status: number, body: unknown): void {
    const key = `${method} ${path}`;
    const queue = this.routes.get(key) ?? [];
    queue.push({ status, body });
    this.routes.set(key, queue);
  }

  /** Drop anything scripted for `METHOD path` so a test can re-script it. */
  reset(method: string, path: string): void {
    this.routes.delete(`${method} ${path}`);
  }

  requests(method?: string, path?: string): LoggedRequest[] {
    return this.log.filter(
      (entry) =>
        (method === undefined || entry.method === method) &&
        (path === undefined || entry.path === path),
    );
  }

  async start(): Promise<string> {
    this.server = createServer((request, response) => void this.handle(request, response));
    await new Promise<void>((resolve) => {
      this.server?.listen(0, "127.0.0.1", resolve);
    });
    const address = this.server.address();
    if (address === null || typeof address === "string") {
      throw new Error("stub failed to bind");
    }
    this.baseUrl = `http://127.0.0.1:${address.port}`;
    return this.baseUrl;
  }

  async stop(): Promise<void> {
    const server = this.server;
    if (!server) return;
    await new Promise<void>((resolve, reject) => {
      server.close((error) => (error ? reject(error) : resolve()));
    });
    this.server = undefined;
  }

  private async handle(request: IncomingMessage, response: ServerResponse): Promise<void> {
    const chunks: Buffer[] = [];
    for await (const chunk of request) {
      chunks.push(chunk as Buffer);
    }
    const raw = Buffer.concat(chunks).toString("utf-8");
    const path = (request.url ?? "").split("?")[0];
    this.log.push({
      method: request.method ?? "",
      path,
      body: raw ? JSON.parse(raw) : null,
    });

    const queue = this.routes.get(`${request.method} ${path}`);
    if (!queue || queue.length === 0) {
      response.writeHead(500, { "content-type": "application/json" });
      response.end(JSON.stringify({ detail: `unscripted route ${request.method} ${path}` }));
      return;
    }
    const scripted = queue.length > 1 ? (queue.shift() as ScriptedResponse) : queue[0];
    response.writeHead(scripted.status, { "content-type": "application/json" });
    response.end(JSON.stringify(scripted.body));
  }
}

// --- shared fixtures ---

export function idleState(): SessionState {
  return {
    phase: "Idle",
    survey: { gender: "female", age: 20, country: "DE", experience: "one_to_two_years" },
    activeTask: null,
    serverUrl: "http://127.0.0.1:9000",
    userId: "7e6c2f7b-54a2-4f4e-9a1f-3a1f0a6c2b11",
  };
}

export function needsSurveyState(): SessionState {
  return { ...idleState(), phase: "NeedsSurvey", survey: null, userId: null };
}

export function solvingState(taskKey = "brackets", language = "python"): SessionState {
  return {
    ...idleState(),
    phase: "Solving",
    activeTask: {
      taskKey,
      language,
      draftFilePath: `/home/student/.codetrail/solutions/${taskKey}.py`,
    },
  };
}

export function sampleTasks(): TaskInfo[] {
  const names: Array<[string, Record<string, string>, Record<string, string>]> = [
    ["pies", { en: "Pies", es: "Pasteles" }, { en: "Split the bill for pies.", es: "Divide la cuenta de los pasteles." }],
    ["max_3", { en: "Max of three", es: "Máximo de tres" }, { en: "Print the largest of three numbers.", es: "Imprime el mayor de tres números." }],
    ["is_zero", { en: "Find the zero", es: "Busca el cero" }, { en: "Answer whether any number is zero.", es: "Responde si algún número es cero." }],
    ["voting", { en: "Voting age", es: "Edad de voto" }, { en: "Count who may vote.", es: "Cuenta quién puede votar." }],
    ["max_digit", { en: "Largest digit", es: "Dígito mayor" }, { en: "Print the largest digit.", es: "Imprime el dígito mayor." }],
    ["brackets", { en: "Brackets", es: "Paréntesis" }, { en: "Wrap the word in brackets.", es: "Envuelve la palabra en paréntesis." }],
  ];
  return names.map(([key, taskNames, taskDescriptions]) => ({
    key,
    names: taskNames,
    descriptions: taskDescriptions,
    examples: [{ input: "example", output: "e(x(a(m)p)l)e" }],
    supportedLanguages: ["python", "java"],
  }));
}
