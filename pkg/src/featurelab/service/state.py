"""In-memory stores for datasets, sessions, and jobs.

Datasets are immutable once created; sessions mutate only under the store
lock; job results are installed atomically so readers see either the old
complete result set or the new one, never a mixture.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from typing import Optional

from ..errors import BusySessionError, NotFoundError
from ..select.pipeline import FeatureSet
from ..spectra.dataset import FeatureTable
from ..spectra.registry import IndexRegistry


@dataclass
class DatasetRecord:
    dataset_id: str
    name: str
    kind: str  # "features" | "reflectance"
    table: FeatureTable
    registry: Optional[IndexRegistry]
    diagnostics: dict
    correlation_cache: Optional[dict] = field(default=None, repr=False)

    def summary(self) -> dict:
        return {
            "dataset_id": self.dataset_id,
            "name": self.name,
            "kind": self.kind,
            "n": self.table.n,
            "d": self.table.d,
            "feature_names": list(self.table.feature_names),
            "target_name": self.table.target_name,
        }


@dataclass
class SessionRecord:
    session_id: str
    dataset_id: str
    feature_set: FeatureSet
    k: int
    seed: int
    history: list[dict] = field(default_factory=list)
    latest_report: Optional[dict] = None
    latest_ranking: Optional[dict] = None
    latest_comparison: Optional[dict] = None
    active_job: Optional[str] = None

    def record_move(self, feature: str, direction: str) -> None:
        self.history.append(
            {"op": "move", "feature": feature, "direction": direction, "at": time.time()}
        )

    def record_replace(self, feature_set: FeatureSet) -> None:
        self.history.append(
            {
                "op": "replace",
                "selected": list(feature_set.selected),
                "unselected": list(feature_set.unselected),
                "at": time.time(),
            }
        )

    def payload(self) -> dict:
        return {
            "session_id": self.session_id,
            "dataset_id": self.dataset_id,
            "feature_set": {
                "selected": list(self.feature_set.selected),
                "unselected": list(self.feature_set.unselected),
            },
            "k": self.k,
            "seed": self.seed,
            "history_length": len(self.history),
            "active_job": self.active_job,
            "has_report": self.latest_report is not None,
            "has_ranking": self.latest_ranking is not None,
            "has_comparison": self.latest_comparison is not None,
        }


@dataclass
class JobRecord:
    job_id: str
    session_id: str
    kind: str  # "regress" | "autoselect" | "compare"
    status: str = "queued"  # queued -> running -> done | failed
    progress: float = 0.0
    error: Optional[str] = None

    def payload(self) -> dict:
        out = {
            "job_id": self.job_id,
            "session_id": self.session_id,
            "kind": self.kind,
            "status": self.status,
            "progress": self.progress,
        }
        if self.error is not None:
            out["error"] = self.error
        if self.status == "done":
            out["result"] = {"report_path": f"/sessions/{self.session_id}/report"}
        return out


class Store:
    """All shared state behind one lock; operations are short and simple."""

    def __init__(self):
        self.lock = threading.RLock()
        self.datasets: dict[str, DatasetRecord] = {}
        self.sessions: dict[str, SessionRecord] = {}
        self.jobs: dict[str, JobRecord] = {}
        self._counter = 0

    def next_id(self, prefix: str) -> str:
        with self.lock:
            self._counter += 1
            return f"{prefix}-{self._counter:06d}"

    def dataset(self, dataset_id: str) -> DatasetRecord:
        record = self.datasets.get(dataset_id)
        if record is None:
            raise NotFoundError(f"unknown dataset {dataset_id!r}")
        return record

    def session(self, session_id: str) -> SessionRecord:
        record = self.sessions.get(session_id)
        if record is None:
            raise NotFoundError(f"unknown session {session_id!r}")
        return record

    def job(self, job_id: str) -> JobRecord:
        record = self.jobs.get(job_id)
        if record is None:
            raise NotFoundError(f"unknown job {job_id!r}")
        return record

    def claim_session(self, session_id: str, job_id: str) -> None:
        """Mark a session busy; rejects if a job is already queued/running."""
        with self.lock:
            session = self.session(session_id)
            if session.active_job is not None:
                raise BusySessionError(
                    f"session {session_id} is busy with job {session.active_job}"
                )
            session.active_job = job_id

    def release_session(self, session_id: str) -> None:
        with self.lock:
            self.session(session_id).active_job = None
