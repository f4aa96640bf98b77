"""Reduce snapshot granularity by dropping intermediate, non-final states."""

MODE_ALL = "all"
MODE_LINE_COMPLETED = "lineCompleted"
MODE_DEDUPE_ONLY = "dedupeOnly"

FILTER_MODES = (MODE_ALL, MODE_LINE_COMPLETED, MODE_DEDUPE_ONLY)


def line_count(fragment: str) -> int:
    return 1 + fragment.count("\n")


def kept_indices(snapshots, mode: str) -> list:
    """Indices of the snapshots a finality criterion keeps.

    all: every index. dedupeOnly: drop a record whose fragment equals the
    previously kept fragment. lineCompleted: keep index i iff it is the last
    one or line_count changes between i and i+1 (i.e. the last state of every
    maximal equal-line-count run). The last snapshot is always kept.
    """
    if mode not in FILTER_MODES:
        raise ValueError(f"unknown finality criterion {mode!r}")
    n = len(snapshots)
    if mode == MODE_ALL:
        return list(range(n))
    if mode == MODE_DEDUPE_ONLY:
        kept = []
        last_fragment = None
        for i, snap in enumerate(snapshots):
            if not kept or snap.fragment != last_fragment:
                kept.append(i)
                last_fragment = snap.fragment
        return kept
    kept = []
    for i in range(n):
        if i == n - 1 or line_count(snapshots[i].fragment) != line_count(
            snapshots[i + 1].fragment
        ):
            kept.append(i)
    return kept


def filter_intermediate(snapshots, mode: str) -> list:
    return [snapshots[i] for i in kept_indices(snapshots, mode)]
