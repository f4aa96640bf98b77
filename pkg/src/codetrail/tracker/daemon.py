"""The local capture engine: survey, task selection, tracked solving, submit.

One daemon instance owns one data directory. All state transitions and record
appends run under a single lock with daemon-assigned, monotonically
nondecreasing timestamps, so on-disk record order equals timestamp order.
Every record is flushed to disk as it is written; killing the process loses
at most the record being written.

Privacy boundary: the only file ever read for snapshots is the draft file the
daemon itself created, and uploads contain only the two CSV streams plus the
survey; no paths, no account names, no other file contents.
"""

import json
import os
import threading
import time

import requests

from ..codecs import (
    ACTION_HEADER,
    SNAPSHOT_HEADER,
    encode_action_row,
    encode_snapshot_row,
)
from ..post.scoring import ProcessOutcome, RunnerMissing, build_argv, run_command
from ..records import ActionRecord, SnapshotRecord, SurveyInfo
from ..tasks import TaskSpec, load_task_set, task_by_key
from .config import TrackerConfig
from .watcher import DraftWatcher

PHASE_NEEDS_SURVEY = "NeedsSurvey"
PHASE_IDLE = "Idle"
PHASE_SOLVING = "Solving"
PHASE_SUBMITTING = "Submitting"

HTTP_TIMEOUT_SECONDS = 10


class WrongPhase(RuntimeError):
    def __init__(self, expected: str, actual: str):
        self.expected = expected
        self.actual = actual
        super().__init__(f"operation requires phase {expected}, daemon is {actual}")


class UnknownTask(LookupError):
    pass


class UnsupportedLanguage(ValueError):
    pass


class InvalidSurvey(ValueError):
    pass


class InvalidEvent(ValueError):
    pass


class NothingToSubmit(RuntimeError):
    pass


class ServerUnreachable(ConnectionError):
    pass


class ServerRejected(RuntimeError):
    def __init__(self, status_code: int, message: str):
        self.status_code = status_code
        self.message = message
        super().__init__(f"server answered {status_code}: {message}")


class _ActiveTask:
    def __init__(self, task: TaskSpec, language: str, draft_path, log_dir):
        self.task = task
        self.language = language
        self.draft_path = draft_path
        self.log_dir = log_dir
        self.snapshots_file = None
        self.actions_file = None
        self.snapshot_count = 0
        self.last_fragment = None


class TrackerDaemon:
    """Owns one data dir, one optional active task, and the record channel."""

    def __init__(self, config: TrackerConfig, fetch_tasks: bool = True):
        self.config = config
        self._lock = threading.Lock()
        self._last_ts = 0
        self._watcher = None
        self._active = None

        self.config.data_dir.mkdir(parents=True, exist_ok=True)
        (self.config.data_dir / "solutions").mkdir(exist_ok=True)
        (self.config.data_dir / "logs").mkdir(exist_ok=True)

        self.survey = self._load_survey()
        self.user_id = self._load_user_id()
        self.phase = PHASE_IDLE if self.survey else PHASE_NEEDS_SURVEY
        self.tasks = self._fetch_tasks() if fetch_tasks else []

    # --- persistence helpers ---

    def _survey_path(self):
        return self.config.data_dir / "survey.json"

    def _user_id_path(self):
        return self.config.data_dir / "user_id"

    def _load_survey(self):
        path = self._survey_path()
        if not path.exists():
            return None
        return SurveyInfo.from_json(json.loads(path.read_text("utf-8")))

    def _load_user_id(self):
        path = self._user_id_path()
        if not path.exists():
            return None
        return path.read_text("utf-8").strip() or None

    def _fetch_tasks(self):
        try:
            response = requests.get(
                f"{self.config.server_url}/api/tasks", timeout=HTTP_TIMEOUT_SECONDS
            )
            response.raise_for_status()
            return [TaskSpec.from_json(item) for item in response.json()]
        except (requests.ConnectionError, requests.Timeout, requests.HTTPError) as exc:
            if self.config.tasks_fallback_path is not None:
                return load_task_set(self.config.tasks_fallback_path)
            raise ServerUnreachable(
                f"cannot fetch tasks from {self.config.server_url} "
                f"and no local fallback is configured: {exc}"
            ) from exc

    # --- clock ---

    def _now_millis(self) -> int:
        # called under the lock; never goes backwards even if the wall clock does
        now = int(time.time() * 1000)
        self._last_ts = max(self._last_ts, now)
        return self._last_ts

    # --- state ---

    def state(self) -> dict:
        with self._lock:
            active = None
            if self._active is not None:
                active = {
                    "taskKey": self._active.task.key,
                    "language": self._active.language,
                    "draftFilePath": str(self._active.draft_path),
                }
            return {
                "phase": self.phase,
                "survey": self.survey.to_json() if self.survey else None,
                "activeTask": active,
                "serverUrl": self.config.server_url,
                "userId": self.user_id,
            }

    def task_list(self) -> list:
        with self._lock:
            return list(self.tasks)

    # --- survey ---

    def submit_survey(self, survey: SurveyInfo):
        with self._lock:
            if self.phase != PHASE_NEEDS_SURVEY:
                raise WrongPhase(PHASE_NEEDS_SURVEY, self.phase)
            self._survey_path().write_text(
                json.dumps(survey.to_json(), ensure_ascii=False) + "\n", "utf-8"
            )
            self.survey = survey
            self.phase = PHASE_IDLE

    # --- task selection ---

    def select_task(self, task_key: str, language: str):
        with self._lock:
            if self.phase != PHASE_IDLE:
                raise WrongPhase(PHASE_IDLE, self.phase)
            task = task_by_key(self.tasks, task_key)
            if task is None:
                raise UnknownTask(f"no task named {task_key!r}")
            if language not in task.supported_languages:
                raise UnsupportedLanguage(
                    f"task {task_key!r} does not support {language!r}"
                )
            extension = self.config.extensions.get(language)
            if extension is None:
                raise UnsupportedLanguage(
                    f"no draft file extension configured for {language!r}"
                )

            draft = self.config.data_dir / "solutions" / f"{task_key}.{extension}"
            if not draft.exists():
                draft.write_text("", "utf-8")
            initial = draft.read_text("utf-8")

            task_logs = self.config.data_dir / "logs" / task_key
            task_logs.mkdir(parents=True, exist_ok=True)
            taken = [int(p.name) for p in task_logs.iterdir() if p.name.isdigit()]
            log_dir = task_logs / str(max(taken) + 1 if taken else 0)
            log_dir.mkdir()

            active = _ActiveTask(task, language, draft, log_dir)
            active.snapshots_file = open(
                log_dir / "snapshots.csv", "a", encoding="utf-8", newline=""
            )
            active.actions_file = open(
                log_dir / "actions.csv", "a", encoding="utf-8", newline=""
            )
            active.snapshots_file.write(SNAPSHOT_HEADER + "\n")
            active.actions_file.write(ACTION_HEADER + "\n")
            self._active = active
            self.phase = PHASE_SOLVING

            self._append_snapshot(initial)
            self._append_action("Lifecycle", "TaskSelected", f"task={task_key}")

        watcher = DraftWatcher(
            draft, self._on_draft_change, self.config.poll_millis
        )
        watcher.start(seen_content=initial)
        self._watcher = watcher
        return self.state()

    # --- record channel (call under lock) ---

    def _append_snapshot(self, fragment: str):
        active = self._active
        record = SnapshotRecord.create(
            timestamp_millis=self._now_millis(),
            task_key=active.task.key,
            language=active.language,
            file_name=active.draft_path.name,
            fragment=fragment,
        )
        active.snapshots_file.write(encode_snapshot_row(record))
        active.snapshots_file.flush()
        os.fsync(active.snapshots_file.fileno())
        active.last_fragment = fragment
        active.snapshot_count += 1
        return record

    def _append_action(self, event_type: str, action_id: str, detail: str):
        active = self._active
        record = ActionRecord.create(
            timestamp_millis=self._now_millis(),
            event_type=event_type,
            action_id=action_id,
            detail=detail,
        )
        active.actions_file.write(encode_action_row(record))
        active.actions_file.flush()
        os.fsync(active.actions_file.fileno())
        return record

    # --- capture ---

    def _on_draft_change(self, content: str):
        # watcher-thread entry: silently drop anything outside Solving
        with self._lock:
            if self.phase != PHASE_SOLVING or self._active is None:
                return
            if content == self._active.last_fragment:
                return
            self._append_snapshot(content)

    def capture_change(self, content: str):
        """Record `content` as the draft's current text; None when unchanged."""
        with self._lock:
            if self.phase != PHASE_SOLVING:
                raise WrongPhase(PHASE_SOLVING, self.phase)
            if content == self._active.last_fragment:
                return None
            return self._append_snapshot(content)

    # --- events ---

    def ingest_event(self, event_type: str, action_id: str, detail: str = ""):
        with self._lock:
            if self.phase != PHASE_SOLVING:
                raise WrongPhase(PHASE_SOLVING, self.phase)
            if not action_id:
                raise InvalidEvent("actionId must be nonempty")
            try:
                return self._append_action(event_type, action_id, detail)
            except ValueError as exc:
                raise InvalidEvent(str(exc)) from None

    # --- run ---

    def run_solution(self, stdin_text: str = "") -> ProcessOutcome:
        with self._lock:
            if self.phase != PHASE_SOLVING:
                raise WrongPhase(PHASE_SOLVING, self.phase)
            active = self._active
            template = self.config.runners.get(active.language)
            if template is None:
                raise RunnerMissing(
                    f"no run command configured for {active.language!r}"
                )
            argv = build_argv(template, str(active.draft_path))
            cwd = active.draft_path.parent
            timeout = self.config.run_timeout_millis
        # the run itself happens outside the lock; capture keeps flowing
        outcome = run_command(
            argv, stdin_text, timeout, cwd=cwd, env=dict(os.environ)
        )
        with self._lock:
            if self.phase == PHASE_SOLVING and self._active is active:
                self._append_action("Run", "Run", f"exit={outcome.exit_code}")
        return outcome

    # --- submit ---

    def submit_solution(self) -> int:
        with self._lock:
            if self.phase != PHASE_SOLVING:
                raise WrongPhase(PHASE_SOLVING, self.phase)
            active = self._active
            if active.snapshot_count == 0:
                raise NothingToSubmit("no snapshots captured yet")
            self.phase = PHASE_SUBMITTING
            active.snapshots_file.flush()
            active.actions_file.flush()
            snapshots_csv = (active.log_dir / "snapshots.csv").read_bytes()
            actions_csv = (active.log_dir / "actions.csv").read_bytes()
            task_key = active.task.key
            language = active.language
            survey_json = json.dumps(self.survey.to_json())

        try:
            user_id = self._ensure_user_id()
            response = requests.post(
                f"{self.config.server_url}/api/data",
                data={
                    "userId": user_id,
                    "taskKey": task_key,
                    "language": language,
                    "survey": survey_json,
                },
                files={
                    "snapshots": ("snapshots.csv", snapshots_csv, "text/csv"),
                    "actions": ("actions.csv", actions_csv, "text/csv"),
                },
                timeout=HTTP_TIMEOUT_SECONDS,
            )
        except (requests.ConnectionError, requests.Timeout) as exc:
            with self._lock:
                self.phase = PHASE_SOLVING
            raise ServerUnreachable(str(exc)) from exc
        except ServerUnreachable:
            with self._lock:
                self.phase = PHASE_SOLVING
            raise

        if response.status_code != 201:
            with self._lock:
                self.phase = PHASE_SOLVING
            raise ServerRejected(response.status_code, response.text)

        index = response.json()["submissionIndex"]
        watcher, self._watcher = self._watcher, None
        if watcher is not None:
            watcher.stop()
        with self._lock:
            self._close_active()
            self.phase = PHASE_IDLE
        return index

    def _ensure_user_id(self) -> str:
        with self._lock:
            if self.user_id is not None:
                return self.user_id
        try:
            response = requests.post(
                f"{self.config.server_url}/api/users", timeout=HTTP_TIMEOUT_SECONDS
            )
            response.raise_for_status()
        except (requests.ConnectionError, requests.Timeout, requests.HTTPError) as exc:
            raise ServerUnreachable(f"cannot obtain a user id: {exc}") from exc
        user_id = response.json()["id"]
        with self._lock:
            self.user_id = user_id
            self._user_id_path().write_text(user_id + "\n", "utf-8")
        return user_id

    # --- teardown ---

    def _close_active(self):
        active, self._active = self._active, None
        if active is None:
            return
        for handle in (active.snapshots_file, active.actions_file):
            if handle is not None:
                handle.close()

    def stop(self):
        watcher, self._watcher = self._watcher, None
        if watcher is not None:
            watcher.stop()
        with self._lock:
            self._close_active()
            if self.phase in (PHASE_SOLVING, PHASE_SUBMITTING):
                self.phase = PHASE_IDLE
