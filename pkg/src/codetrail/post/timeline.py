"""Score the surviving snapshots of a session in chronological order."""

from dataclasses import dataclass

from ..records import Score
from .filtering import kept_indices
from .scoring import RunnerConfig, SandboxFailure, score_solution


@dataclass(frozen=True)
class TimelineEntry:
    """Score of one kept snapshot; `score` is None when scoring failed
    for sandbox reasons, with the cause in `error`."""

    snapshot_index: int
    timestamp_millis: int
    score: Score | None
    error: str | None = None

    def to_json(self) -> dict:
        return {
            "snapshotIndex": self.snapshot_index,
            "timestampMillis": self.timestamp_millis,
            "score": None if self.score is None else self.score.to_json(),
            "error": self.error,
        }


def score_timeline(snapshots, task, criterion: str, runner: RunnerConfig) -> list:
    """Filter with the finality criterion, then score each kept snapshot.

    Per-snapshot sandbox failures become score-unavailable entries instead of
    aborting the timeline.
    """
    entries = []
    for index in kept_indices(snapshots, criterion):
        snap = snapshots[index]
        try:
            score = score_solution(task, snap.fragment, runner)
            entries.append(
                TimelineEntry(
                    snapshot_index=index,
                    timestamp_millis=snap.timestamp_millis,
                    score=score,
                )
            )
        except SandboxFailure as exc:
            entries.append(
                TimelineEntry(
                    snapshot_index=index,
                    timestamp_millis=snap.timestamp_millis,
                    score=None,
                    error=str(exc),
                )
            )
    return entries
