import random

import pytest

from codetrail import ActionRecord, SnapshotRecord

# Fragment building blocks that stress the CSV escaping rules.
NASTY_PIECES = [
    "",
    "plain",
    "a,b",
    'say "hi"',
    "line1\nline2",
    "tab\there",
    "cr\rhere",
    "crlf\r\nhere",
    "привет мир",
    "émoji 🙂",
    "trailing space ",
    '"',
    '""',
    ",\n\r",
    "print('x')",
]


def random_text(rng: random.Random, max_pieces: int = 4) -> str:
    return "".join(rng.choice(NASTY_PIECES) for _ in range(rng.randint(0, max_pieces)))


def make_snapshot(
    ts: int = 1700000000000,
    fragment: str = "",
    task_key: str = "brackets",
    language: str = "python",
    file_name: str = "brackets.py",
) -> SnapshotRecord:
    return SnapshotRecord.create(ts, task_key, language, file_name, fragment)


def make_action(
    ts: int = 1700000000000,
    event_type: str = "Action",
    action_id: str = "EditorPaste",
    detail: str = "",
) -> ActionRecord:
    return ActionRecord.create(ts, event_type, action_id, detail)


def random_snapshots(rng: random.Random, n: int) -> list:
    ts = rng.randint(0, 2_000_000_000_000)
    records = []
    for _ in range(n):
        ts += rng.randint(0, 5000)
        records.append(make_snapshot(ts=ts, fragment=random_text(rng)))
    return records


def random_actions(rng: random.Random, n: int) -> list:
    ts = rng.randint(0, 2_000_000_000_000)
    records = []
    for _ in range(n):
        ts += rng.randint(0, 5000)
        records.append(
            make_action(
                ts=ts,
                event_type=rng.choice(["Action", "Run", "Lifecycle"]),
                action_id=rng.choice(["EditorPaste", "EditorCopy", "Run", "Submit"]),
                detail=random_text(rng, 2),
            )
        )
    return records


@pytest.fixture
def rng():
    return random.Random(20240816)


# --- live HTTP fixtures for daemon/server integration ---

import json
import socket
import threading
import time
from pathlib import Path

import uvicorn


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class LiveServer:
    """Run an ASGI app on a real loopback port in a background thread."""

    def __init__(self, app, port: int | None = None):
        self.port = free_port() if port is None else port
        self._server = uvicorn.Server(
            uvicorn.Config(app, host="127.0.0.1", port=self.port, log_level="error")
        )
        self._thread = threading.Thread(target=self._server.run, daemon=True)

    @property
    def url(self) -> str:
        return f"http://127.0.0.1:{self.port}"

    def start(self) -> "LiveServer":
        self._thread.start()
        deadline = time.monotonic() + 10
        while not self._server.started:
            if time.monotonic() > deadline:
                raise RuntimeError("server did not start within 10 s")
            time.sleep(0.01)
        return self

    def stop(self):
        self._server.should_exit = True
        self._thread.join(timeout=10)


def wait_until(predicate, timeout: float = 5.0, interval: float = 0.01) -> bool:
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        if predicate():
            return True
        time.sleep(interval)
    return predicate()


def write_tasks_file(path: Path) -> Path:
    from codetrail.tasks import default_task_set

    path.write_text(
        json.dumps([t.to_json() for t in default_task_set()]), "utf-8"
    )
    return path
