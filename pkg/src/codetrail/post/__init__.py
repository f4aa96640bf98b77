"""Post-processing pipeline: merge streams, score solutions, filter snapshots,
anonymize identifiers."""

from .anonymize import UnknownLanguageFamily, anonymize_code, load_profile, tokenize
from .filtering import FILTER_MODES, filter_intermediate, kept_indices, line_count
from .merge import MergedRow, UnsortedInput, merge_streams
from .scoring import (
    RunnerConfig,
    RunnerMissing,
    SandboxFailure,
    TIMEOUT_EXIT_CODE,
    default_runners,
    load_runners,
    runner_for,
    score_solution,
)
from .timeline import TimelineEntry, score_timeline

__all__ = [
    "FILTER_MODES",
    "MergedRow",
    "RunnerConfig",
    "RunnerMissing",
    "SandboxFailure",
    "TIMEOUT_EXIT_CODE",
    "TimelineEntry",
    "UnknownLanguageFamily",
    "UnsortedInput",
    "anonymize_code",
    "default_runners",
    "filter_intermediate",
    "kept_indices",
    "line_count",
    "load_profile",
    "load_runners",
    "merge_streams",
    "runner_for",
    "score_solution",
    "score_timeline",
    "tokenize",
]
