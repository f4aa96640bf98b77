"""Filesystem submission store.

The on-disk layout IS the export layout:

    <root>/users.txt                                  issued ids, one per line
    <root>/<userId>/<taskKey>/<n>/snapshots.csv
    <root>/<userId>/<taskKey>/<n>/actions.csv
    <root>/<userId>/<taskKey>/<n>/meta.json

Uploaded bytes are stored verbatim; the store adds only the id, the index,
and the receipt time. Each submission lands via an atomic directory rename,
so concurrent writers never interleave within a file and a crash leaves no
half-submission behind (stray .tmp-* dirs are ignored by every scan).
"""

import io
import json
import os
import threading
import uuid
import zipfile
from dataclasses import dataclass
from pathlib import Path

from ..records import SurveyInfo

SUBMISSION_FILES = ("snapshots.csv", "actions.csv", "meta.json")


class StorageFailure(RuntimeError):
    pass


@dataclass(frozen=True)
class StoredSubmission:
    user_id: str
    task_key: str
    submission_index: int
    path: Path


class SubmissionStore:
    """Single-process authority over one storage directory."""

    def __init__(self, root):
        self.root = Path(root)
        self._lock = threading.Lock()
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise StorageFailure(f"cannot create storage root {self.root}: {exc}") from exc
        self._users_file = self.root / "users.txt"
        self._users = set()
        if self._users_file.exists():
            self._users.update(
                line.strip()
                for line in self._users_file.read_text("utf-8").splitlines()
                if line.strip()
            )

    # --- users ---

    def register_user(self) -> str:
        user_id = str(uuid.uuid4())
        with self._lock:
            try:
                with open(self._users_file, "a", encoding="utf-8") as fh:
                    fh.write(user_id + "\n")
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageFailure(f"cannot persist user id: {exc}") from exc
            self._users.add(user_id)
        return user_id

    def is_known_user(self, user_id: str) -> bool:
        with self._lock:
            return user_id in self._users

    def user_count(self) -> int:
        with self._lock:
            return len(self._users)

    # --- submissions ---

    def _indices(self, user_id: str, task_key: str) -> list:
        task_dir = self.root / user_id / task_key
        if not task_dir.is_dir():
            return []
        return sorted(
            int(entry.name)
            for entry in task_dir.iterdir()
            if entry.is_dir() and entry.name.isdigit()
        )

    def store_submission(
        self,
        user_id: str,
        task_key: str,
        language: str,
        snapshots_csv: bytes,
        actions_csv: bytes,
        survey: SurveyInfo,
        received_at_millis: int,
    ) -> int:
        with self._lock:
            indices = self._indices(user_id, task_key)
            index = indices[-1] + 1 if indices else 0
            task_dir = self.root / user_id / task_key
            staging = task_dir / f".tmp-{index}-{uuid.uuid4().hex}"
            meta = {
                "userId": user_id,
                "taskKey": task_key,
                "language": language,
                "submissionIndex": index,
                "survey": survey.to_json(),
                "receivedAtMillis": received_at_millis,
            }
            try:
                staging.mkdir(parents=True)
                (staging / "snapshots.csv").write_bytes(snapshots_csv)
                (staging / "actions.csv").write_bytes(actions_csv)
                (staging / "meta.json").write_text(
                    json.dumps(meta, ensure_ascii=False, indent=2) + "\n", "utf-8"
                )
                os.replace(staging, task_dir / str(index))
            except OSError as exc:
                raise StorageFailure(f"cannot store submission: {exc}") from exc
        return index

    def submissions(self) -> list:
        """All stored submissions, sorted by (userId, taskKey, index)."""
        found = []
        with self._lock:
            for user_dir in sorted(self.root.iterdir()):
                if not user_dir.is_dir():
                    continue
                for task_dir in sorted(user_dir.iterdir()):
                    if not task_dir.is_dir():
                        continue
                    for sub_dir in task_dir.iterdir():
                        if sub_dir.is_dir() and sub_dir.name.isdigit():
                            found.append(
                                StoredSubmission(
                                    user_id=user_dir.name,
                                    task_key=task_dir.name,
                                    submission_index=int(sub_dir.name),
                                    path=sub_dir,
                                )
                            )
        found.sort(key=lambda s: (s.user_id, s.task_key, s.submission_index))
        return found

    def export_zip(self) -> bytes:
        """Zip of every stored submission, bytes identical to what was stored."""
        buffer = io.BytesIO()
        try:
            with zipfile.ZipFile(buffer, "w", zipfile.ZIP_DEFLATED) as archive:
                for sub in self.submissions():
                    prefix = f"{sub.user_id}/{sub.task_key}/{sub.submission_index}"
                    for name in SUBMISSION_FILES:
                        info = zipfile.ZipInfo(f"{prefix}/{name}")
                        info.compress_type = zipfile.ZIP_DEFLATED
                        archive.writestr(info, (sub.path / name).read_bytes())
        except OSError as exc:
            raise StorageFailure(f"cannot export archive: {exc}") from exc
        return buffer.getvalue()
