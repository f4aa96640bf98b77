"""Combine a snapshot stream and an action stream into one ordered timeline."""

from dataclasses import dataclass


class UnsortedInput(ValueError):
    """An input stream is not sorted by timestamp."""

    def __init__(self, stream: str, index: int):
        self.stream = stream
        self.index = index
        super().__init__(f"{stream} stream is unsorted at index {index}")


@dataclass(frozen=True)
class MergedRow:
    """One timeline row. For action rows, snapshot_index points at the nearest
    snapshot at or before the action (-1 if none); for snapshot rows it is None.
    payload_ref indexes into the originating source list."""

    kind: str  # "snapshot" | "action"
    timestamp_millis: int
    snapshot_index: int | None
    payload_ref: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "timestampMillis": self.timestamp_millis,
            "snapshotIndex": self.snapshot_index,
            "payloadRef": self.payload_ref,
        }


def _check_sorted(records, stream: str):
    for i in range(1, len(records)):
        if records[i].timestamp_millis < records[i - 1].timestamp_millis:
            raise UnsortedInput(stream, i)


def merge_streams(snapshots, actions) -> list:
    """Merge two individually sorted streams, snapshots first on equal stamps."""
    _check_sorted(snapshots, "snapshots")
    _check_sorted(actions, "actions")
    rows = []
    si = ai = 0
    while si < len(snapshots) or ai < len(actions):
        take_snapshot = si < len(snapshots) and (
            ai >= len(actions)
            or snapshots[si].timestamp_millis <= actions[ai].timestamp_millis
        )
        if take_snapshot:
            rows.append(
                MergedRow(
                    kind="snapshot",
                    timestamp_millis=snapshots[si].timestamp_millis,
                    snapshot_index=None,
                    payload_ref=si,
                )
            )
            si += 1
        else:
            rows.append(
                MergedRow(
                    kind="action",
                    timestamp_millis=actions[ai].timestamp_millis,
                    snapshot_index=si - 1,
                    payload_ref=ai,
                )
            )
            ai += 1
    return rows
