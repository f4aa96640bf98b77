"""HTTP service: task/translation config, anonymous user ids, submission intake.

All validation happens at the edge: a submission is stored only if both CSV
parts decode under the strict codecs and the survey parses, so everything at
rest is well-formed. Errors carry a stable machine-readable prefix in the
detail string (UnknownUser / UnknownTask / MalformedPayload).
"""

import json
import time

from fastapi import FastAPI, File, Form, HTTPException, UploadFile
from fastapi.responses import Response

from ..codecs import MalformedCsv, decode_action_csv, decode_snapshot_csv
from ..records import SurveyInfo
from ..tasks import default_task_set, load_task_set, task_by_key
from .storage import StorageFailure, SubmissionStore
from .translations import default_translations, load_translations


def _load_config(tasks_path, translations_path):
    tasks = load_task_set(tasks_path) if tasks_path else default_task_set()
    bundle = (
        load_translations(translations_path)
        if translations_path
        else default_translations()
    )
    return tasks, bundle


def create_app(storage_dir, tasks_path=None, translations_path=None) -> FastAPI:
    """Build the service. Configs load (and validate) eagerly; a broken
    file aborts startup rather than serving a half-configured instance."""
    store = SubmissionStore(storage_dir)
    tasks, bundle = _load_config(tasks_path, translations_path)
    state = {"tasks": tasks, "bundle": bundle}

    app = FastAPI(title="codetrail collection server")

    @app.get("/api/tasks")
    def get_tasks():
        return [task.to_json() for task in state["tasks"]]

    @app.get("/api/translations")
    def get_translations():
        return state["bundle"].to_json()

    @app.post("/api/users", status_code=201)
    def register_user():
        try:
            return {"id": store.register_user()}
        except StorageFailure as exc:
            raise HTTPException(status_code=500, detail=f"StorageFailure: {exc}")

    @app.post("/api/data", status_code=201)
    def upload_solution(
        userId: str = Form(...),
        taskKey: str = Form(...),
        language: str = Form(...),
        survey: str = Form(...),
        snapshots: UploadFile = File(...),
        actions: UploadFile = File(...),
    ):
        if not store.is_known_user(userId):
            raise HTTPException(status_code=404, detail=f"UnknownUser: {userId!r}")
        if task_by_key(state["tasks"], taskKey) is None:
            raise HTTPException(status_code=404, detail=f"UnknownTask: {taskKey!r}")
        snapshots_csv = snapshots.file.read()
        actions_csv = actions.file.read()
        try:
            survey_info = SurveyInfo.from_json(json.loads(survey))
        except (ValueError, TypeError) as exc:
            raise HTTPException(
                status_code=400, detail=f"MalformedPayload: survey: {exc}"
            )
        try:
            decode_snapshot_csv(snapshots_csv.decode("utf-8"))
        except (MalformedCsv, UnicodeDecodeError, ValueError) as exc:
            raise HTTPException(
                status_code=400, detail=f"MalformedPayload: snapshots: {exc}"
            )
        try:
            decode_action_csv(actions_csv.decode("utf-8"))
        except (MalformedCsv, UnicodeDecodeError, ValueError) as exc:
            raise HTTPException(
                status_code=400, detail=f"MalformedPayload: actions: {exc}"
            )
        try:
            index = store.store_submission(
                user_id=userId,
                task_key=taskKey,
                language=language,
                snapshots_csv=snapshots_csv,
                actions_csv=actions_csv,
                survey=survey_info,
                received_at_millis=int(time.time() * 1000),
            )
        except StorageFailure as exc:
            raise HTTPException(status_code=500, detail=f"StorageFailure: {exc}")
        return {"submissionIndex": index}

    @app.get("/api/export")
    def export_archive():
        try:
            payload = store.export_zip()
        except StorageFailure as exc:
            raise HTTPException(status_code=500, detail=f"StorageFailure: {exc}")
        return Response(
            content=payload,
            media_type="application/zip",
            headers={"Content-Disposition": "attachment; filename=export.zip"},
        )

    @app.post("/api/admin/reload")
    def reload_config():
        try:
            tasks, bundle = _load_config(tasks_path, translations_path)
        except (ValueError, OSError) as exc:
            raise HTTPException(status_code=400, detail=f"ReloadFailed: {exc}")
        state["tasks"] = tasks
        state["bundle"] = bundle
        return {"tasks": len(tasks), "languages": list(bundle.languages)}

    return app
