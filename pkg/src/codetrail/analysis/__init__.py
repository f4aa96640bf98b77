"""Read-only analysis over collected datasets: statistics, counts, and plots."""

from .counts import SolutionCountMatrix, final_scores, solution_counts
from .dataset import (
    CorruptSubmission,
    Dataset,
    Submission,
    load_dataset,
    load_session,
    load_submission,
)
from .plots import (
    Axis,
    ColorBand,
    EmptySession,
    EmptyTimeline,
    Marker,
    PlotSpec,
    action_timeline,
    score_plot,
)
from .stats import ParticipantReport, participant_stats
from .svg import render_svg

__all__ = [
    "Axis",
    "ColorBand",
    "CorruptSubmission",
    "Dataset",
    "EmptySession",
    "EmptyTimeline",
    "Marker",
    "ParticipantReport",
    "PlotSpec",
    "SolutionCountMatrix",
    "Submission",
    "action_timeline",
    "final_scores",
    "load_dataset",
    "load_session",
    "load_submission",
    "participant_stats",
    "render_svg",
    "score_plot",
    "solution_counts",
]
