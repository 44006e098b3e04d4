"""Append-only JSON-lines log of issued recommendations."""

from __future__ import annotations

import json
import threading
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

DEFAULT_LOG_ENV = "AEROSHIELD_LOG"
DEFAULT_LOG_FILENAME = "aeroshield-runs.jsonl"


@dataclass(frozen=True)
class RunRecord:
    """One issued recommendation: what was asked, what was advised."""

    timestamp: str
    scenario_id: str
    limit_sv: float
    plan_kind: str
    plan_altitude_km: float | None
    dose_sv: float
    loss_cents: int
    config_hash: str


def utc_now_rfc3339() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


def record_from_plan(plan_response: dict, config_hash: str, timestamp: str | None = None) -> RunRecord:
    """Build a record from an engine plan response dict."""
    rec = plan_response["recommendation"]
    return RunRecord(
        timestamp=timestamp or utc_now_rfc3339(),
        scenario_id=plan_response["scenario"]["id"],
        limit_sv=plan_response["limit_sv"],
        plan_kind=rec["plan"]["kind"],
        plan_altitude_km=rec["plan"]["altitude_km"],
        dose_sv=rec["dose_sv"],
        loss_cents=rec["loss_cents"],
        config_hash=config_hash,
    )


class RunLog:
    """Serialized appender / reader for the JSON-lines run log."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()

    def ensure_writable(self) -> None:
        """Touch the log file; raises OSError when the path cannot be written."""
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8"):
                pass

    def append(self, record: RunRecord) -> None:
        line = json.dumps(asdict(record), sort_keys=True)
        with self._lock:
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()

    def read(self) -> list[RunRecord]:
        if not self.path.exists():
            return []
        records = []
        with self.path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    records.append(RunRecord(**json.loads(line)))
        return records
