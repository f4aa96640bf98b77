"""Domain records shared by the tracker, the collection server, and the analysis tools.

All types are immutable values that validate their invariants on construction,
so anything that exists is well-formed. Wire formats (CSV columns, JSON keys)
use camelCase names; the Python attributes are snake_case.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction

EXPERIENCE_LEVELS = (
    "none",
    "less_than_half_year",
    "half_to_one_year",
    "one_to_two_years",
    "two_to_four_years",
    "four_to_six_years",
    "more_than_six_years",
)

EVENT_TYPES = ("Action", "Run", "Lifecycle")


def iso_from_millis(millis: int) -> str:
    """Render epoch milliseconds as ISO-8601 UTC with millisecond precision.

    The rendering is exact: no float arithmetic is involved, so equal inputs
    always produce byte-identical output.
    """
    seconds, ms = divmod(millis, 1000)
    stamp = datetime.fromtimestamp(seconds, tz=timezone.utc)
    return f"{stamp:%Y-%m-%dT%H:%M:%S}.{ms:03d}Z"


@dataclass(frozen=True)
class SurveyInfo:
    """Demographic survey filled once per user before the first task."""

    gender: str
    age: int
    country: str
    experience: str

    def __post_init__(self):
        if not isinstance(self.age, int) or not 0 <= self.age <= 150:
            raise ValueError(f"age must be an integer in [0, 150], got {self.age!r}")
        if self.experience not in EXPERIENCE_LEVELS:
            raise ValueError(
                f"experience must be one of {EXPERIENCE_LEVELS}, got {self.experience!r}"
            )
        if len(self.country) != 2 or not self.country.isalpha():
            raise ValueError(f"country must be a two-letter code, got {self.country!r}")
        if not self.gender:
            raise ValueError("gender must be nonempty (use 'undefined' to opt out)")

    def to_json(self) -> dict:
        return {
            "gender": self.gender,
            "age": self.age,
            "country": self.country,
            "experience": self.experience,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SurveyInfo":
        try:
            return cls(
                gender=data["gender"],
                age=data["age"],
                country=data["country"],
                experience=data["experience"],
            )
        except KeyError as exc:
            raise ValueError(f"survey is missing field {exc.args[0]!r}") from None


@dataclass(frozen=True)
class SnapshotRecord:
    """One timestamped full-text capture of the tracked solution file."""

    timestamp_millis: int
    date_iso: str
    task_key: str
    language: str
    file_name: str
    fragment: str

    def __post_init__(self):
        expected = iso_from_millis(self.timestamp_millis)
        if self.date_iso != expected:
            raise ValueError(
                f"dateIso {self.date_iso!r} does not render timestampMillis "
                f"{self.timestamp_millis} (expected {expected!r})"
            )

    @classmethod
    def create(
        cls,
        timestamp_millis: int,
        task_key: str,
        language: str,
        file_name: str,
        fragment: str,
    ) -> "SnapshotRecord":
        """Build a record with the ISO date derived from the timestamp."""
        return cls(
            timestamp_millis=timestamp_millis,
            date_iso=iso_from_millis(timestamp_millis),
            task_key=task_key,
            language=language,
            file_name=file_name,
            fragment=fragment,
        )


@dataclass(frozen=True)
class ActionRecord:
    """One timestamped editor/IDE/command event with free-text metadata."""

    timestamp_millis: int
    date_iso: str
    event_type: str
    action_id: str
    detail: str

    def __post_init__(self):
        expected = iso_from_millis(self.timestamp_millis)
        if self.date_iso != expected:
            raise ValueError(
                f"dateIso {self.date_iso!r} does not render timestampMillis "
                f"{self.timestamp_millis} (expected {expected!r})"
            )
        if self.event_type not in EVENT_TYPES:
            raise ValueError(
                f"eventType must be one of {EVENT_TYPES}, got {self.event_type!r}"
            )
        if not self.action_id:
            raise ValueError("actionId must be nonempty")

    @classmethod
    def create(
        cls, timestamp_millis: int, event_type: str, action_id: str, detail: str
    ) -> "ActionRecord":
        return cls(
            timestamp_millis=timestamp_millis,
            date_iso=iso_from_millis(timestamp_millis),
            event_type=event_type,
            action_id=action_id,
            detail=detail,
        )


@dataclass(frozen=True)
class SolutionSession:
    """A user's complete submitted attempt at one task in one language."""

    user_id: str
    task_key: str
    language: str
    survey: SurveyInfo
    snapshots: tuple = field(default_factory=tuple)
    actions: tuple = field(default_factory=tuple)
    submitted_at_millis: int = 0

    def __post_init__(self):
        object.__setattr__(self, "snapshots", tuple(self.snapshots))
        object.__setattr__(self, "actions", tuple(self.actions))
        if not self.snapshots:
            raise ValueError("a submitted session must contain at least one snapshot")
        prev = None
        for i, snap in enumerate(self.snapshots):
            if snap.task_key != self.task_key:
                raise ValueError(
                    f"snapshot {i} is for task {snap.task_key!r}, "
                    f"session is for {self.task_key!r}"
                )
            if prev is not None:
                if snap.timestamp_millis < prev.timestamp_millis:
                    raise ValueError(f"snapshot timestamps decrease at index {i}")
                if snap.fragment == prev.fragment:
                    raise ValueError(f"consecutive snapshots {i - 1} and {i} are equal")
            prev = snap


@dataclass(frozen=True)
class Score:
    """Passing-test count over total, kept as an exact integer pair."""

    passed: int
    total: int

    def __post_init__(self):
        if self.total <= 0:
            raise ValueError(f"total must be positive, got {self.total}")
        if not 0 <= self.passed <= self.total:
            raise ValueError(f"passed must be in [0, {self.total}], got {self.passed}")

    @property
    def value(self) -> Fraction:
        return Fraction(self.passed, self.total)

    def to_json(self) -> dict:
        return {"passed": self.passed, "total": self.total, "value": float(self.value)}
