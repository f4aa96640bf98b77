"""Tracker daemon: local capture of snapshots and events, run and submit."""

from .api import create_api
from .config import TrackerConfig, load_config
from .daemon import (
    InvalidEvent,
    InvalidSurvey,
    NothingToSubmit,
    ServerRejected,
    ServerUnreachable,
    TrackerDaemon,
    UnknownTask,
    UnsupportedLanguage,
    WrongPhase,
)
from .watcher import DraftWatcher

__all__ = [
    "DraftWatcher",
    "InvalidEvent",
    "InvalidSurvey",
    "NothingToSubmit",
    "ServerRejected",
    "ServerUnreachable",
    "TrackerConfig",
    "TrackerDaemon",
    "UnknownTask",
    "UnsupportedLanguage",
    "WrongPhase",
    "create_api",
    "load_config",
]
