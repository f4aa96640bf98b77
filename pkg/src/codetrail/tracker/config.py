"""Tracker daemon configuration, loaded from a JSON file."""

import json
from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_LOCAL_PORT = 9271
DEFAULT_POLL_MILLIS = 200
DEFAULT_RUN_TIMEOUT_MILLIS = 10000

DEFAULT_EXTENSIONS = {
    "python": "py",
    "java": "java",
    "kotlin": "kt",
    "cpp": "cpp",
}


@dataclass(frozen=True)
class TrackerConfig:
    """Everything the daemon needs: where to store data, which server to talk
    to, how to watch, run, and name draft files."""

    data_dir: Path
    server_url: str
    local_port: int = DEFAULT_LOCAL_PORT
    poll_millis: int = DEFAULT_POLL_MILLIS
    run_timeout_millis: int = DEFAULT_RUN_TIMEOUT_MILLIS
    runners: dict = field(default_factory=dict)  # language -> command template
    tasks_fallback_path: Path | None = None
    extensions: dict = field(default_factory=lambda: dict(DEFAULT_EXTENSIONS))
    panel_dir: Path | None = None

    def __post_init__(self):
        object.__setattr__(self, "data_dir", Path(self.data_dir))
        if self.tasks_fallback_path is not None:
            object.__setattr__(
                self, "tasks_fallback_path", Path(self.tasks_fallback_path)
            )
        if self.panel_dir is not None:
            object.__setattr__(self, "panel_dir", Path(self.panel_dir))
        if self.poll_millis <= 0:
            raise ValueError("pollMillis must be positive")
        if self.run_timeout_millis <= 0:
            raise ValueError("runTimeoutMillis must be positive")
        object.__setattr__(self, "server_url", self.server_url.rstrip("/"))

    @classmethod
    def from_json(cls, data: dict) -> "TrackerConfig":
        try:
            kwargs = {
                "data_dir": data["dataDir"],
                "server_url": data["serverUrl"],
            }
        except KeyError as exc:
            raise ValueError(f"config is missing field {exc.args[0]!r}") from None
        if "localPort" in data:
            kwargs["local_port"] = int(data["localPort"])
        if "pollMillis" in data:
            kwargs["poll_millis"] = int(data["pollMillis"])
        if "runTimeoutMillis" in data:
            kwargs["run_timeout_millis"] = int(data["runTimeoutMillis"])
        if "runners" in data:
            kwargs["runners"] = dict(data["runners"])
        if "tasksFallbackPath" in data:
            kwargs["tasks_fallback_path"] = data["tasksFallbackPath"]
        if "extensions" in data:
            kwargs["extensions"] = dict(data["extensions"])
        if "panelDir" in data:
            kwargs["panel_dir"] = data["panelDir"]
        return cls(**kwargs)


def load_config(path) -> TrackerConfig:
    with open(path, encoding="utf-8") as fh:
        return TrackerConfig.from_json(json.load(fh))
