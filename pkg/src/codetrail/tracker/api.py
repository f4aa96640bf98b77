"""Loopback HTTP API over the tracker daemon, consumed by the task panel
and by editor plugins that push events."""

from importlib import resources
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.responses import RedirectResponse
from fastapi.staticfiles import StaticFiles

from ..post.scoring import RunnerMissing
from ..records import SurveyInfo
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

_ERROR_STATUS = (
    (WrongPhase, 409),
    (NothingToSubmit, 409),
    (UnknownTask, 404),
    (RunnerMissing, 404),
    (UnsupportedLanguage, 400),
    (InvalidSurvey, 400),
    (InvalidEvent, 400),
    (ServerUnreachable, 503),
    (ServerRejected, 502),
)


def _raise_http(exc: Exception):
    for kind, status in _ERROR_STATUS:
        if isinstance(exc, kind):
            raise HTTPException(
                status_code=status, detail=f"{kind.__name__}: {exc}"
            ) from exc
    raise exc


def _action_json(record) -> dict:
    return {
        "date": record.date_iso,
        "timestampMillis": record.timestamp_millis,
        "eventType": record.event_type,
        "actionId": record.action_id,
        "detail": record.detail,
    }


def _panel_directory(daemon: TrackerDaemon):
    if daemon.config.panel_dir is not None:
        return daemon.config.panel_dir
    bundled = Path(str(resources.files("codetrail").joinpath("data/panel")))
    return bundled if bundled.is_dir() else None


def create_api(daemon: TrackerDaemon) -> FastAPI:
    app = FastAPI(title="codetrail tracker daemon")

    @app.get("/state")
    def get_state():
        return daemon.state()

    @app.get("/tasks")
    def get_tasks():
        return [task.to_json() for task in daemon.task_list()]

    @app.post("/survey")
    def post_survey(payload: dict = Body(...)):
        try:
            survey = SurveyInfo.from_json(payload)
        except (ValueError, TypeError) as exc:
            raise HTTPException(status_code=400, detail=f"InvalidSurvey: {exc}")
        try:
            daemon.submit_survey(survey)
        except Exception as exc:  # noqa: BLE001 - translated to HTTP statuses
            _raise_http(exc)
        return daemon.state()

    @app.post("/task/select")
    def post_select(payload: dict = Body(...)):
        task_key = payload.get("taskKey", "")
        language = payload.get("language", "")
        try:
            return daemon.select_task(task_key, language)
        except Exception as exc:  # noqa: BLE001
            _raise_http(exc)

    @app.post("/event")
    def post_event(payload: dict = Body(...)):
        try:
            record = daemon.ingest_event(
                payload.get("eventType", ""),
                payload.get("actionId", ""),
                payload.get("detail", ""),
            )
        except Exception as exc:  # noqa: BLE001
            _raise_http(exc)
        return _action_json(record)

    @app.post("/run")
    def post_run(payload: dict = Body(default={})):
        try:
            outcome = daemon.run_solution(payload.get("stdin", ""))
        except Exception as exc:  # noqa: BLE001
            _raise_http(exc)
        return {
            "exitCode": outcome.exit_code,
            "stdout": outcome.stdout,
            "stderr": outcome.stderr,
            "durationMillis": outcome.duration_millis,
            "timedOut": outcome.timed_out,
        }

    @app.post("/submit")
    def post_submit():
        try:
            index = daemon.submit_solution()
        except Exception as exc:  # noqa: BLE001
            _raise_http(exc)
        return {"submissionIndex": index}

    panel = _panel_directory(daemon)
    if panel is not None:
        app.mount("/panel", StaticFiles(directory=panel, html=True), name="panel")

        @app.get("/", include_in_schema=False)
        def index():
            return RedirectResponse(url="/panel/")

    return app
