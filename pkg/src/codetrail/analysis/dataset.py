"""Load collected submissions from the per-user, per-task directory layout.

The layout is the one the collection server stores and exports:

    <root>/<userId>/<taskKey>/<index>/snapshots.csv
    <root>/<userId>/<taskKey>/<index>/actions.csv
    <root>/<userId>/<taskKey>/<index>/meta.json

Loading never mutates the tree. Folders that fail to parse are skipped and
reported, so one corrupt submission cannot poison a whole dataset.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from ..codecs import decode_action_csv, decode_snapshot_csv
from ..records import SurveyInfo


@dataclass(frozen=True)
class CorruptSubmission:
    """A submission folder that was skipped, and why."""

    path: Path
    reason: str


@dataclass(frozen=True)
class Submission:
    """One fully parsed submission folder."""

    user_id: str
    task_key: str
    submission_index: int
    language: str
    survey: SurveyInfo
    received_at_millis: int
    snapshots: tuple
    actions: tuple
    path: Path

    @property
    def final_fragment(self) -> str:
        return self.snapshots[-1].fragment if self.snapshots else ""


@dataclass(frozen=True)
class Dataset:
    """Parsed submissions under one root, plus the folders that were skipped."""

    root: Path
    submissions: tuple
    corrupt: tuple

    def user_ids(self) -> list:
        return sorted({sub.user_id for sub in self.submissions})


def load_session(path) -> tuple:
    """Read (snapshots, actions) from a folder holding the two CSV files.

    Works for both stored submissions and the tracker's local log folders,
    which lack meta.json.
    """
    path = Path(path)
    snapshots = decode_snapshot_csv((path / "snapshots.csv").read_text("utf-8"))
    actions = decode_action_csv((path / "actions.csv").read_text("utf-8"))
    return tuple(snapshots), tuple(actions)


def load_submission(path) -> Submission:
    """Parse one submission folder; user, task, and index come from the path.

    Raises ValueError when any of the three files is missing or malformed, or
    when meta.json names a different user, task, or index than the folder.
    """
    path = Path(path)
    user_id = path.parent.parent.name
    task_key = path.parent.name
    try:
        index = int(path.name)
        snapshots, actions = load_session(path)
        meta = json.loads((path / "meta.json").read_text("utf-8"))
        for key, expected in (
            ("userId", user_id),
            ("taskKey", task_key),
            ("submissionIndex", index),
        ):
            if key in meta and meta[key] != expected:
                raise ValueError(f"meta.json {key} is {meta[key]!r}, folder says {expected!r}")
        return Submission(
            user_id=user_id,
            task_key=task_key,
            submission_index=index,
            language=meta["language"],
            survey=SurveyInfo.from_json(meta["survey"]),
            received_at_millis=int(meta["receivedAtMillis"]),
            snapshots=snapshots,
            actions=actions,
            path=path,
        )
    except ValueError:
        raise
    except (OSError, KeyError, TypeError) as exc:
        raise ValueError(f"{type(exc).__name__}: {exc}") from exc


def load_dataset(root) -> Dataset:
    """Walk a dataset root, parsing every numeric submission folder.

    Non-directory entries (such as users.txt) are ignored; folders that fail
    to parse land in Dataset.corrupt with the failure reason.
    """
    root = Path(root)
    if not root.is_dir():
        raise ValueError(f"dataset root {root} is not a directory")
    submissions = []
    corrupt = []
    for user_dir in sorted(root.iterdir()):
        if not user_dir.is_dir():
            continue
        for task_dir in sorted(user_dir.iterdir()):
            if not task_dir.is_dir():
                continue
            for sub_dir in sorted(task_dir.iterdir()):
                if not sub_dir.is_dir() or not sub_dir.name.isdigit():
                    continue
                try:
                    submissions.append(load_submission(sub_dir))
                except ValueError as exc:
                    corrupt.append(CorruptSubmission(path=sub_dir, reason=str(exc)))
    submissions.sort(key=lambda s: (s.user_id, s.task_key, s.submission_index))
    return Dataset(root=root, submissions=tuple(submissions), corrupt=tuple(corrupt))
