"""Append-only JSON-lines store of analysis results, keyed by canonical key."""

from __future__ import annotations

import json
import os
import threading
from dataclasses import asdict, dataclass, field
from pathlib import Path

from filelock import FileLock

from . import __version__ as ENGINE_VERSION

STORE_ENV = "BARYTRANS_STORE"


class StoreError(OSError):
    pass


@dataclass
class ResultRecord:
    id: str
    canonical_key: str
    dimension: int
    vertex_count: int
    gorenstein_index: int
    smooth: bool
    symmetric: bool
    kahler_einstein: bool
    verdict: dict
    trajectory: dict = field(default_factory=dict)
    engine_version: str = ENGINE_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "ResultRecord":
        return cls(**json.loads(line))


class ResultStore:
    """One JSON object per line; appends are serialized across threads and processes."""

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.Lock()
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.touch(exist_ok=True)
        except OSError as e:
            raise StoreError(f"cannot open results store {self.path}: {e}") from e
        if not os.access(self.path, os.W_OK):
            raise StoreError(f"results store {self.path} is not writable")
        self._file_lock = FileLock(str(self.path) + ".lock")

    @classmethod
    def from_env(cls) -> "ResultStore | None":
        path = os.environ.get(STORE_ENV)
        return cls(path) if path else None

    def append(self, record: ResultRecord) -> None:
        line = record.to_json() + "\n"
        with self._lock, self._file_lock:
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(line)

    def records(self) -> list[ResultRecord]:
        out = []
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                if line.strip():
                    out.append(ResultRecord.from_json(line))
        return out

    def query(self, canonical_key=None, dimension=None, index=None, verdict=None, current_only=False):
        """Records matching every given filter; ``verdict`` matches the verdict kind."""
        out = []
        for r in self.records():
            if canonical_key is not None and r.canonical_key != canonical_key:
                continue
            if dimension is not None and r.dimension != dimension:
                continue
            if index is not None and r.gorenstein_index != index:
                continue
            if verdict is not None and r.verdict.get("kind") != verdict:
                continue
            if current_only and r.engine_version != ENGINE_VERSION:
                continue
            out.append(r)
        return out

    def reusable(self) -> dict[str, ResultRecord]:
        """Latest current-version record per canonical key; older versions are ignored."""
        return {r.canonical_key: r for r in self.records() if r.engine_version == ENGINE_VERSION}
