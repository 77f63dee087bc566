"""HTTP API for interactive judgment-revision sessions.

Sessions live in memory (optionally snapshotted to JSON files) and hold one
PC matrix each.  Every mutation recomputes the full analysis from scratch so
the expert's next judgment is informed by fresh K, D, kappa and worst-triad
data.  Errors are returned as {"code": ..., "message": ...}.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .analysis import analyze, report_to_dict
from .matrix import MatrixValidationError, PCMatrix, _parse_ratio, complete_reciprocal
from .reduction import AlreadyConsistentError, Revision, apply_revision, suggest_revision

MIN_CONCEPTS = 2
MAX_CONCEPTS = 25


class ApiError(Exception):
    """Error with an HTTP status and a machine-readable code."""

    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class Session:
    id: str
    matrix: PCMatrix
    created_at: str
    updated_at: str
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    """In-memory session map; mutations to one session are serialized."""

    def __init__(self, snapshot_dir: Path | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._snapshot_dir = snapshot_dir
        if snapshot_dir is not None:
            snapshot_dir.mkdir(parents=True, exist_ok=True)
            self._load_snapshots()

    def create(self, n: int, labels: list[str] | None) -> Session:
        if not MIN_CONCEPTS <= n <= MAX_CONCEPTS:
            raise ApiError(
                400,
                "n_out_of_range",
                f"n must lie in [{MIN_CONCEPTS}, {MAX_CONCEPTS}], got {n}",
            )
        try:
            matrix = complete_reciprocal(
                {(i, j): 1.0 for i in range(n) for j in range(i + 1, n)},
                n,
                tuple(labels) if labels else None,
            )
        except MatrixValidationError as exc:
            raise ApiError(400, "invalid_labels", str(exc)) from exc
        session = Session(
            id=uuid.uuid4().hex, matrix=matrix, created_at=_now(), updated_at=_now()
        )
        with self._lock:
            self._sessions[session.id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise ApiError(404, "unknown_session", f"no session with id {session_id}")
        return session

    def _snapshot(self, session: Session) -> None:
        if self._snapshot_dir is None:
            return
        payload = {
            "id": session.id,
            "labels": list(session.matrix.labels),
            "matrix": [list(row) for row in session.matrix.entries],
            "createdAt": session.created_at,
            "updatedAt": session.updated_at,
            "history": session.history,
        }
        path = self._snapshot_dir / f"{session.id}.json"
        path.write_text(json.dumps(payload, indent=2) + "\n")

    def _load_snapshots(self) -> None:
        for path in sorted(self._snapshot_dir.glob("*.json")):
            try:
                data = json.loads(path.read_text())
                session = Session(
                    id=data["id"],
                    matrix=PCMatrix(data["matrix"], tuple(data["labels"])),
                    created_at=data["createdAt"],
                    updated_at=data["updatedAt"],
                    history=data.get("history", []),
                )
            except (KeyError, ValueError, TypeError):
                continue  # ignore corrupt snapshots rather than refuse to start
            self._sessions[session.id] = session

    def mutate(self, session_id: str, fn) -> Session:
        """Run fn(session) -> PCMatrix under the session lock, then snapshot."""
        session = self.get(session_id)
        with session.lock:
            session.matrix = fn(session)
            session.updated_at = _now()
        self._snapshot(session)
        return session


class CreateSessionBody(BaseModel):
    n: int
    labels: list[str] | None = None


class JudgmentBody(BaseModel):
    value: float | str


class ApplyBody(BaseModel):
    theta: float = Field(default=0.5)


def _revision_dict(rev: Revision) -> dict:
    return {
        "i": rev.i,
        "j": rev.j,
        "oldValue": rev.old_value,
        "newValue": rev.new_value,
        "theta": rev.theta,
        "predictedK": rev.predicted_k,
        "predictedD": rev.predicted_d,
    }


def _session_dict(session: Session) -> dict:
    return {
        "id": session.id,
        "n": session.matrix.n,
        "labels": list(session.matrix.labels),
        "createdAt": session.created_at,
        "updatedAt": session.updated_at,
        "history": session.history,
    }


def _analysis_dict(session: Session) -> dict:
    return report_to_dict(analyze(session.matrix))


def create_app(
    snapshot_dir: Path | None = None, static_dir: Path | None = None
) -> FastAPI:
    app = FastAPI(title="pcrank", version="0.1.0")
    store = SessionStore(snapshot_dir=snapshot_dir)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"code": exc.code, "message": exc.message}
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "validation_error", "message": str(exc.errors())},
        )

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        session = store.create(body.n, body.labels)
        return {**_session_dict(session), "analysis": _analysis_dict(session)}

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        return {**_session_dict(session), "analysis": _analysis_dict(session)}

    @app.get("/api/sessions/{session_id}/analysis")
    def get_analysis(session_id: str):
        return _analysis_dict(store.get(session_id))

    @app.put("/api/sessions/{session_id}/judgments/{i}/{j}")
    def put_judgment(session_id: str, i: int, j: int, body: JudgmentBody):
        value = body.value
        if isinstance(value, str):
            try:
                value = _parse_ratio(value, "value")
            except MatrixValidationError as exc:
                raise ApiError(400, "invalid_value", str(exc)) from exc

        def set_entry(session: Session) -> PCMatrix:
            if not 0 <= i < j < session.matrix.n:
                raise ApiError(
                    400,
                    "invalid_pair",
                    f"expected 0 <= i < j < {session.matrix.n}, got ({i},{j})",
                )
            try:
                revised = session.matrix.with_entry(i, j, float(value))
            except MatrixValidationError as exc:
                raise ApiError(400, "invalid_value", str(exc)) from exc
            session.history.append(
                {
                    "type": "judgment",
                    "i": i,
                    "j": j,
                    "oldValue": float(session.matrix.entries[i, j]),
                    "newValue": float(value),
                    "at": _now(),
                }
            )
            return revised

        session = store.mutate(session_id, set_entry)
        return _analysis_dict(session)

    @app.get("/api/sessions/{session_id}/suggestion")
    def get_suggestion(session_id: str, theta: float = 0.5):
        session = store.get(session_id)
        try:
            revision = suggest_revision(session.matrix, theta=theta)
        except AlreadyConsistentError as exc:
            raise ApiError(409, "already_consistent", str(exc)) from exc
        except ValueError as exc:
            raise ApiError(400, "invalid_theta", str(exc)) from exc
        return _revision_dict(revision)

    @app.post("/api/sessions/{session_id}/suggestion/apply")
    def apply_suggestion(session_id: str, body: ApplyBody | None = None):
        theta = body.theta if body is not None else 0.5

        def apply_fn(session: Session) -> PCMatrix:
            try:
                revision = suggest_revision(session.matrix, theta=theta)
            except AlreadyConsistentError as exc:
                raise ApiError(409, "already_consistent", str(exc)) from exc
            except ValueError as exc:
                raise ApiError(400, "invalid_theta", str(exc)) from exc
            session.history.append(
                {**_revision_dict(revision), "type": "suggestion", "at": _now()}
            )
            return apply_revision(session.matrix, revision)

        session = store.mutate(session_id, apply_fn)
        return _analysis_dict(session)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
