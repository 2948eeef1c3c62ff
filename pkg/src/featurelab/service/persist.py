"""One JSON document per session; writes are atomic via rename.

Format version 1. On load the mutation history is replayed against the
dataset's full feature list and must reproduce the persisted feature_set
exactly (compared by hash); a mismatch marks the document corrupt.
"""

from __future__ import annotations

import hashlib
import json
import os
from typing import Optional

from ..errors import IngestError
from ..select.pipeline import FeatureSet
from .state import SessionRecord

FORMAT_VERSION = 1


def _feature_set_hash(feature_set: FeatureSet) -> str:
    blob = json.dumps(
        {"selected": feature_set.selected, "unselected": feature_set.unselected},
        sort_keys=True,
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def session_path(data_dir: str, session_id: str) -> str:
    return os.path.join(data_dir, "sessions", f"{session_id}.json")


def save_session(data_dir: str, session: SessionRecord) -> None:
    path = session_path(data_dir, session.session_id)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    document = {
        "version": FORMAT_VERSION,
        "session_id": session.session_id,
        "dataset_id": session.dataset_id,
        "feature_set": {
            "selected": list(session.feature_set.selected),
            "unselected": list(session.feature_set.unselected),
        },
        "feature_set_hash": _feature_set_hash(session.feature_set),
        "k": session.k,
        "seed": session.seed,
        "history": list(session.history),
        "latest": {
            "report": session.latest_report,
            "ranking": session.latest_ranking,
            "comparison": session.latest_comparison,
        },
    }
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(document, fh, indent=2, sort_keys=True)
    os.replace(tmp, path)


def replay_history(all_features: list[str], history: list[dict]) -> FeatureSet:
    feature_set = FeatureSet(selected=list(all_features), unselected=[])
    for entry in history:
        if entry["op"] == "move":
            feature_set.move(entry["feature"], entry["direction"])
        elif entry["op"] == "replace":
            feature_set = FeatureSet(
                selected=list(entry["selected"]), unselected=list(entry["unselected"])
            )
        else:
            raise IngestError(f"unknown history op {entry['op']!r}")
    return feature_set


def load_session(
    data_dir: str, session_id: str, all_features: Optional[list[str]] = None
) -> SessionRecord:
    """Restore one session; raises IngestError naming the session on damage."""
    path = session_path(data_dir, session_id)
    try:
        with open(path, encoding="utf-8") as fh:
            document = json.load(fh)
    except FileNotFoundError:
        raise IngestError(f"session {session_id}: no persisted document") from None
    except json.JSONDecodeError as err:
        raise IngestError(f"session {session_id}: corrupt document ({err})") from None
    if document.get("version") != FORMAT_VERSION:
        raise IngestError(
            f"session {session_id}: unsupported format version {document.get('version')!r}"
        )

    try:
        feature_set = FeatureSet(
            selected=list(document["feature_set"]["selected"]),
            unselected=list(document["feature_set"]["unselected"]),
        )
        session = SessionRecord(
            session_id=document["session_id"],
            dataset_id=document["dataset_id"],
            feature_set=feature_set,
            k=int(document["k"]),
            seed=int(document["seed"]),
            history=list(document["history"]),
            latest_report=document["latest"]["report"],
            latest_ranking=document["latest"]["ranking"],
            latest_comparison=document["latest"]["comparison"],
        )
    except (KeyError, TypeError, ValueError) as err:
        raise IngestError(f"session {session_id}: corrupt document ({err})") from None

    if document.get("feature_set_hash") != _feature_set_hash(feature_set):
        raise IngestError(f"session {session_id}: feature set hash mismatch")
    if all_features is not None:
        replayed = replay_history(all_features, session.history)
        if _feature_set_hash(replayed) != _feature_set_hash(feature_set):
            raise IngestError(f"session {session_id}: history does not replay to the stored state")
    return session


def list_session_ids(data_dir: str) -> list[str]:
    directory = os.path.join(data_dir, "sessions")
    if not os.path.isdir(directory):
        return []
    return sorted(
        name[: -len(".json")] for name in os.listdir(directory) if name.endswith(".json")
    )
