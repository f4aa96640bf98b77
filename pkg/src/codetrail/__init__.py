"""codetrail: capture, collect, and analyze how code comes to be.

A tracker daemon records full-text snapshots of a draft file and editor/
command events while someone solves a predefined task; a collection server
gathers anonymous submissions; post-processing and analysis tools merge,
score, filter, anonymize, and plot the resulting streams.
"""

__version__ = "0.1.0"

from .codecs import (
    ACTION_HEADER,
    MalformedCsv,
    SNAPSHOT_HEADER,
    decode_action_csv,
    decode_snapshot_csv,
    encode_action_csv,
    encode_snapshot_csv,
)
from .records import (
    ActionRecord,
    EVENT_TYPES,
    EXPERIENCE_LEVELS,
    Score,
    SnapshotRecord,
    SolutionSession,
    SurveyInfo,
    iso_from_millis,
)
from .tasks import TaskSpec, TestCase, default_task_set, load_task_set, normalize_output

__all__ = [
    "ACTION_HEADER",
    "ActionRecord",
    "EVENT_TYPES",
    "EXPERIENCE_LEVELS",
    "MalformedCsv",
    "SNAPSHOT_HEADER",
    "Score",
    "SnapshotRecord",
    "SolutionSession",
    "SurveyInfo",
    "TaskSpec",
    "TestCase",
    "decode_action_csv",
    "decode_snapshot_csv",
    "default_task_set",
    "encode_action_csv",
    "encode_snapshot_csv",
    "iso_from_millis",
    "load_task_set",
    "normalize_output",
]
