"""Run a solution against a task's tests and compute its passing fraction.

Each test execution happens in its own scratch working directory with a
PATH-only environment and a wall-clock timeout. A crash, timeout, or wrong
output fails that test; sandbox-level problems (interpreter missing, scratch
dir unusable) are reported as SandboxFailure instead of silently scoring 0.
Desk-scale isolation only: subprocess boundaries, no OS-level confinement.
"""

import json
import os
import shlex
import subprocess
import tempfile
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..records import Score

TIMEOUT_EXIT_CODE = -124

_SANDBOX_ENV = {"PATH": os.environ.get("PATH", os.defpath)}


class RunnerMissing(LookupError):
    pass


class SandboxFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class RunnerConfig:
    """Command templates for one language family. `{file}` marks the solution path."""

    command_template: str
    compile_template: str | None = None
    timeout_millis: int = 10000
    file_extension: str = "txt"

    def __post_init__(self):
        if "{file}" not in self.command_template:
            raise ValueError("commandTemplate must contain the {file} placeholder")

    @classmethod
    def from_json(cls, data: dict) -> "RunnerConfig":
        return cls(
            command_template=data["commandTemplate"],
            compile_template=data.get("compileTemplate"),
            timeout_millis=int(data.get("timeoutMillis", 10000)),
            file_extension=data.get("fileExtension", "txt"),
        )


def parse_runners(data: dict) -> dict:
    return {family: RunnerConfig.from_json(cfg) for family, cfg in data.items()}


def load_runners(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse_runners(json.load(fh))


def default_runners() -> dict:
    raw = resources.files("codetrail").joinpath("data/runners.json").read_text("utf-8")
    return parse_runners(json.loads(raw))


def runner_for(runners: dict, language: str) -> RunnerConfig:
    try:
        return runners[language]
    except KeyError:
        raise RunnerMissing(f"no runner configured for language {language!r}") from None


def build_argv(template: str, file_path: str) -> list:
    return [arg.replace("{file}", file_path) for arg in shlex.split(template)]


@dataclass(frozen=True)
class ProcessOutcome:
    exit_code: int
    stdout: str
    stderr: str
    duration_millis: int
    timed_out: bool = False


def run_command(
    argv, stdin_text: str, timeout_millis: int, cwd, env=None
) -> ProcessOutcome:
    """Run one process to completion or kill it at the timeout."""
    started = time.monotonic()
    try:
        completed = subprocess.run(
            argv,
            input=stdin_text.encode("utf-8"),
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            cwd=cwd,
            env=_SANDBOX_ENV if env is None else env,
            timeout=timeout_millis / 1000.0,
        )
    except subprocess.TimeoutExpired as exc:
        duration = int((time.monotonic() - started) * 1000)
        out = exc.stdout.decode("utf-8", "replace") if exc.stdout else ""
        err = exc.stderr.decode("utf-8", "replace") if exc.stderr else ""
        return ProcessOutcome(TIMEOUT_EXIT_CODE, out, err, duration, timed_out=True)
    except OSError as exc:
        raise SandboxFailure(f"could not launch {argv[0]!r}: {exc}") from exc
    duration = int((time.monotonic() - started) * 1000)
    return ProcessOutcome(
        completed.returncode,
        completed.stdout.decode("utf-8", "replace"),
        completed.stderr.decode("utf-8", "replace"),
        duration,
    )


def score_solution(task, code: str, runner: RunnerConfig) -> Score:
    """Score = (tests whose trimmed stdout matches, total tests)."""
    total = len(task.tests)
    with tempfile.TemporaryDirectory(prefix="codetrail-score-") as scratch:
        scratch_path = Path(scratch)
        solution = scratch_path / f"solution.{runner.file_extension}"
        solution.write_text(code, encoding="utf-8")
        if runner.compile_template:
            outcome = run_command(
                build_argv(runner.compile_template, str(solution)),
                "",
                runner.timeout_millis,
                cwd=scratch_path,
            )
            if outcome.exit_code != 0:
                return Score(passed=0, total=total)
        argv = build_argv(runner.command_template, str(solution))
        passed = 0
        for i, test in enumerate(task.tests):
            workdir = scratch_path / f"t{i}"
            workdir.mkdir()
            outcome = run_command(argv, test.input, runner.timeout_millis, cwd=workdir)
            if outcome.exit_code == 0 and test.passes(outcome.stdout):
                passed += 1
    return Score(passed=passed, total=total)
