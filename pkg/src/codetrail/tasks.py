"""Task definitions: identity, localized descriptions, and stdin/stdout tests.

The comparison rule for test output is fixed here: trailing whitespace is
trimmed per line and trailing blank lines are dropped, then the texts must be
equal. Tolerant of platform newline noise, strict on content.
"""

import json
import re
from dataclasses import dataclass
from importlib import resources

_KEY_RE = re.compile(r"^[a-z][a-z0-9_]*$")

TASK_FIELDS = ("key", "names", "descriptions", "examples", "tests", "supportedLanguages")


def normalize_output(text: str) -> str:
    """Right-trim every line and drop trailing blank lines."""
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines)


@dataclass(frozen=True)
class TestCase:
    """One stdin/stdout check. `allow_empty_output` flags intentionally empty output."""

    input: str
    expected_output: str
    allow_empty_output: bool = False

    def __post_init__(self):
        if normalize_output(self.expected_output) == "" and not self.allow_empty_output:
            raise ValueError(
                "expectedOutput is empty after trimming; "
                "set allowEmptyOutput if that is intended"
            )

    def passes(self, actual_stdout: str) -> bool:
        return normalize_output(actual_stdout) == normalize_output(self.expected_output)


@dataclass(frozen=True)
class TaskSpec:
    key: str
    names: dict
    descriptions: dict
    examples: tuple  # of (input, output) pairs, each also present in tests
    tests: tuple  # of TestCase
    supported_languages: tuple

    def __post_init__(self):
        object.__setattr__(self, "examples", tuple(tuple(p) for p in self.examples))
        object.__setattr__(self, "tests", tuple(self.tests))
        object.__setattr__(self, "supported_languages", tuple(self.supported_languages))
        if not _KEY_RE.match(self.key):
            raise ValueError(f"task key must be lowercase snake, got {self.key!r}")
        if not self.tests:
            raise ValueError(f"task {self.key!r} has no tests")
        test_pairs = {(t.input, t.expected_output) for t in self.tests}
        for pair in self.examples:
            if pair not in test_pairs:
                raise ValueError(
                    f"task {self.key!r}: example {pair!r} is not among the tests"
                )

    def name(self, ui_language: str) -> str:
        return self.names.get(ui_language) or next(iter(self.names.values()), self.key)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "names": dict(self.names),
            "descriptions": dict(self.descriptions),
            "examples": [{"input": i, "output": o} for i, o in self.examples],
            "tests": [
                {
                    "input": t.input,
                    "expectedOutput": t.expected_output,
                    **({"allowEmptyOutput": True} if t.allow_empty_output else {}),
                }
                for t in self.tests
            ],
            "supportedLanguages": list(self.supported_languages),
        }

    @classmethod
    def from_json(cls, data: dict) -> "TaskSpec":
        missing = [f for f in TASK_FIELDS if f not in data]
        if missing:
            raise ValueError(f"task object is missing fields {missing}")
        tests = [
            TestCase(
                input=t["input"],
                expected_output=t["expectedOutput"],
                allow_empty_output=bool(t.get("allowEmptyOutput", False)),
            )
            for t in data["tests"]
        ]
        return cls(
            key=data["key"],
            names=dict(data["names"]),
            descriptions=dict(data["descriptions"]),
            examples=[(e["input"], e["output"]) for e in data["examples"]],
            tests=tests,
            supported_languages=list(data["supportedLanguages"]),
        )


def parse_task_set(data) -> list:
    """Parse a tasks.json array into TaskSpec objects, checking key uniqueness."""
    if not isinstance(data, list):
        raise ValueError("task set must be a JSON array")
    tasks = [TaskSpec.from_json(item) for item in data]
    seen = set()
    for task in tasks:
        if task.key in seen:
            raise ValueError(f"duplicate task key {task.key!r}")
        seen.add(task.key)
    return tasks


def load_task_set(path) -> list:
    with open(path, encoding="utf-8") as fh:
        return parse_task_set(json.load(fh))


def default_task_set() -> list:
    """The six-task bundle shipped with the package."""
    raw = resources.files("codetrail").joinpath("data/tasks.json").read_text("utf-8")
    return parse_task_set(json.loads(raw))


def task_by_key(tasks, key: str):
    for task in tasks:
        if task.key == key:
            return task
    return None
