/**
 * Typed client for the tracker daemon's loopback HTTP API.
 *
 * Every request the panel makes goes through one of these methods, so the
 * full write surface of the UI is the method list below.
 */

export interface SurveyPayload {
  gender: string;
  age: number;
  country: string;
  experience: string;
}

export interface ActiveTask {
  taskKey: string;
  language: string;
  draftFilePath: string;
}

export interface SessionState {
  phase: string;
  survey: SurveyPayload | null;
  activeTask: ActiveTask | null;
  serverUrl: string | null;
  userId: string | null;
}

export interface TaskExample {
  input: string;
  output: string;
}

export interface TaskInfo {
  key: string;
  // language code -> localized string; codes here are UI languages, not
  // programming languages
  names: Record<string, string>;
  descriptions: Record<string, string>;
  examples: TaskExample[];
  supportedLanguages: string[];
}

export interface RunResult {
  exitCode: number | null;
  stdout: string;
  stderr: string;
  durationMillis: number;
  timedOut: boolean;
}

export interface SubmitReceipt {
  submissionIndex: number;
}

/** Non-2xx daemon response, carrying the HTTP status and the detail string. */
export class DaemonError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(detail);
    this.name = "DaemonError";
  }

  // details look like "ServerUnreachable: <explanation>"
  get kind(): string {
    const colon = this.detail.indexOf(":");
    return colon === -1 ? this.detail : this.detail.slice(0, colon);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class DaemonClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  getState(): Promise<SessionState> {
    return this.request("GET", "/state");
  }

  getTasks(): Promise<TaskInfo[]> {
    return this.request("GET", "/tasks");
  }

  submitSurvey(survey: SurveyPayload): Promise<SessionState> {
    return this.request("POST", "/survey", survey);
  }

  selectTask(taskKey: string, language: string): Promise<SessionState> {
    return this.request("POST", "/task/select", { taskKey, language });
  }

  runSolution(stdin: string): Promise<RunResult> {
    return this.request("POST", "/run", { stdin });
  }

  submitSolution(): Promise<SubmitReceipt> {
    return this.request("POST", "/submit", {});
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const data = await response.json();
        if (typeof data.detail === "string") detail = data.detail;
      } catch {
        // keep the status text when the body is not JSON
      }
      throw new DaemonError(response.status, detail);
    }
    return (await response.json()) as T;
  }
}
