"""Per-session plot construction: fragment-length timelines and score plots.

Both builders emit a renderer-independent PlotSpec whose time axis is rebased
to seconds from the first plotted point, so sessions recorded years apart
produce comparable plots.
"""

from dataclasses import dataclass


class EmptySession(ValueError):
    """The session holds nothing to plot."""


class EmptyTimeline(ValueError):
    """The score timeline holds no scored entries."""


@dataclass(frozen=True)
class Axis:
    label: str
    unit: str | None = None

    def to_json(self) -> dict:
        data = {"label": self.label}
        if self.unit is not None:
            data["unit"] = self.unit
        return data


@dataclass(frozen=True)
class Marker:
    """A point annotation: an event at time t with a label and a category."""

    t: float
    label: str
    category: str


@dataclass(frozen=True)
class ColorBand:
    """A run of series points (inclusive index range) sharing one score."""

    from_index: int
    to_index: int
    score_value: float


@dataclass(frozen=True)
class PlotSpec:
    """Renderer-independent description of one two-dimensional plot."""

    title: str
    x_axis: Axis
    y_axis: Axis
    series: tuple
    markers: tuple = ()
    color_bands: tuple | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "series", tuple((float(t), float(v)) for t, v in self.series)
        )
        object.__setattr__(self, "markers", tuple(self.markers))
        if self.color_bands is not None:
            object.__setattr__(self, "color_bands", tuple(self.color_bands))
        times = [t for t, _ in self.series]
        if times != sorted(times):
            raise ValueError("series points must be sorted by t")
        marker_times = [m.t for m in self.markers]
        if marker_times != sorted(marker_times):
            raise ValueError("markers must be sorted by t")
        for band in self.color_bands or ():
            if not 0 <= band.from_index <= band.to_index < len(self.series):
                raise ValueError(
                    f"color band [{band.from_index}, {band.to_index}] is out of range"
                )

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "xAxis": self.x_axis.to_json(),
            "yAxis": self.y_axis.to_json(),
            "series": [[t, v] for t, v in self.series],
            "markers": [[m.t, m.label, m.category] for m in self.markers],
            "colorBands": None
            if self.color_bands is None
            else [[b.from_index, b.to_index, b.score_value] for b in self.color_bands],
        }


def action_timeline(merged, snapshots, actions) -> PlotSpec:
    """Fragment length over time, with one marker per recorded action.

    `merged` must be the merge of `snapshots` and `actions`; it supplies the
    plotting order while the two source lists supply the payloads.
    """
    if not merged:
        raise EmptySession("no rows to plot")
    start = merged[0].timestamp_millis
    series = []
    markers = []
    for row in merged:
        t = (row.timestamp_millis - start) / 1000.0
        if row.kind == "snapshot":
            series.append((t, float(len(snapshots[row.payload_ref].fragment))))
        else:
            action = actions[row.payload_ref]
            markers.append(Marker(t=t, label=action.action_id, category=action.action_id))
    context = snapshots[0].task_key if snapshots else "session"
    return PlotSpec(
        title=f"{context}: fragment length and actions",
        x_axis=Axis("time since start", unit="seconds"),
        y_axis=Axis("fragment length (characters)"),
        series=tuple(series),
        markers=tuple(markers),
    )


def score_plot(timeline) -> PlotSpec:
    """Score progression over a session's kept snapshots.

    Maximal runs of equal score become color bands; entries whose scoring
    failed carry no value and are skipped.
    """
    entries = [entry for entry in timeline if entry.score is not None]
    if not entries:
        raise EmptyTimeline("no scored entries to plot")
    start = entries[0].timestamp_millis
    series = [
        ((entry.timestamp_millis - start) / 1000.0, float(entry.score.value))
        for entry in entries
    ]
    bands = []
    run_start = 0
    for i in range(1, len(entries) + 1):
        if i == len(entries) or entries[i].score.value != entries[run_start].score.value:
            bands.append(
                ColorBand(run_start, i - 1, float(entries[run_start].score.value))
            )
            run_start = i
    return PlotSpec(
        title="score progression",
        x_axis=Axis("time since start", unit="seconds"),
        y_axis=Axis("score"),
        series=tuple(series),
        color_bands=tuple(bands),
    )
