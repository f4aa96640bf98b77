import { afterEach, beforeEach, describe, expect, it } from "vitest";
import { DaemonStub, idleState, sampleTasks, solvingState } from "./stub.js";
import { click, mountPanel, realBundle, setValue, textOf, until } from "./helpers.js";

const EN = realBundle().texts.en;
const ES = realBundle().texts.es;

describe("task list", () => {
  let stub: DaemonStub;

  beforeEach(async () => {
    stub = new DaemonStub();
    await stub.start();
    stub.respond("GET", "/state", 200, idleState());
    stub.respond("GET", "/tasks", 200, sampleTasks());
  });

  afterEach(async () => {
    await stub.stop();
    document.body.innerHTML = "";
  });

  it("renders one card per task with names in the UI language", async () => {
    const { root } = await mountPanel(stub);

    const cards = [...root.querySelectorAll(".task-card h3")].map((el) => el.textContent?.trim());
    expect(cards).toEqual([
      "Pies",
      "Max of three",
      "Find the zero",
      "Voting age",
      "Largest digit",
      "Brackets",
    ]);
    expect(textOf(root, '.task-card[data-task="brackets"] .description')).toBe(
      "Wrap the word in brackets.",
    );
  });

  it("re-renders localized text on language switch without re-fetching tasks", async () => {
    const { root } = await mountPanel(stub);
    expect(stub.requests("GET", "/tasks")).toHaveLength(1);

    setValue(root, "#ui-language", "es");

    expect(textOf(root, ".tasks h2")).toBe(ES["tasks.title"]);
    expect(textOf(root, '.task-card[data-task="pies"] h3')).toBe("Pasteles");
    expect(textOf(root, '.task-card[data-task="brackets"] .description')).toBe(
      "Envuelve la palabra en paréntesis.",
    );
    // the switch is purely local: no extra requests of any kind
    expect(stub.requests("GET", "/tasks")).toHaveLength(1);
    expect(stub.requests("POST")).toHaveLength(0);
  });

  it("falls back to another language when a name is missing in the current one", async () => {
    const tasks = sampleTasks();
    tasks[0].names = { en: "Pies" };
    stub.reset("GET", "/tasks");
    stub.respond("GET", "/tasks", 200, tasks);
    const { root } = await mountPanel(stub, { language: "es" });

    expect(textOf(root, '.task-card[data-task="pies"] h3')).toBe("Pies");
  });

  it("selects a task and shows the tracking status pane", async () => {
    stub.respond("POST", "/task/select", 200, solvingState("brackets", "python"));
    const { root } = await mountPanel(stub);

    setValue(root, '[data-task-language="brackets"]', "python");
    click(root, '.select-task[data-task="brackets"]');
    await until(() => root.querySelector(".session") !== null);

    const selects = stub.requests("POST", "/task/select");
    expect(selects).toHaveLength(1);
    expect(selects[0].body).toEqual({ taskKey: "brackets", language: "python" });

    expect(textOf(root, ".session .tracking")).toBe(EN["session.tracking"]);
    expect(textOf(root, "#draft-path")).toBe("/home/student/.codetrail/solutions/brackets.py");
    expect(textOf(root, ".session h2 strong")).toBe("Brackets");
  });

  it("sends the language chosen on the card", async () => {
    stub.respond("POST", "/task/select", 200, solvingState("pies", "java"));
    const { root } = await mountPanel(stub);

    setValue(root, '[data-task-language="pies"]', "java");
    click(root, '.select-task[data-task="pies"]');
    await until(() => stub.requests("POST", "/task/select").length === 1);

    expect(stub.requests("POST", "/task/select")[0].body).toEqual({
      taskKey: "pies",
      language: "java",
    });
  });
});
