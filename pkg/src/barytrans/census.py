"""Batch analysis and grouped strict-type tables."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .canonical import canonical_key
from .classify import DEFAULT_BUDGET, DEFAULT_MAX_HULL_VERTICES, classify
from .fano import (
    FanoFailure,
    FanoPolytope,
    gorenstein_index,
    is_kahler_einstein,
    is_smooth,
    is_symmetric,
    validate_fano,
)
from .formats import PolytopeRecord, make_record
from .store import ResultRecord, ResultStore


def analyze(p: FanoPolytope, id: str, budget: int = DEFAULT_BUDGET,
            max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES) -> ResultRecord:
    verdict, traj = classify(p, budget, max_hull_vertices)
    summary = {"vertex_counts": traj.vertex_counts}
    if traj.terminal is not None:
        summary["terminal"] = [list(v) for v in traj.terminal.vertices]
    return ResultRecord(
        id=id,
        canonical_key=canonical_key(p).decode("ascii"),
        dimension=p.dim,
        vertex_count=len(p.vertices),
        gorenstein_index=gorenstein_index(p),
        smooth=is_smooth(p),
        symmetric=is_symmetric(p),
        kahler_einstein=is_kahler_einstein(p),
        verdict=verdict.to_dict(),
        trajectory=summary,
    )


def _analyze_job(args) -> ResultRecord:
    vertices, id, budget, max_hull = args
    return analyze(FanoPolytope.from_points(vertices), id, budget, max_hull)


@dataclass
class CensusRow:
    dimension: int
    index: int
    strict: dict[int, int] = field(default_factory=dict)
    periodic: int = 0
    unresolved: int = 0
    total: int = 0
    ke: int = 0

    def add(self, r: ResultRecord) -> None:
        kind = r.verdict["kind"]
        if kind == "strict":
            k = r.verdict["k"]
            self.strict[k] = self.strict.get(k, 0) + 1
        elif kind == "periodic":
            self.periodic += 1
        else:
            self.unresolved += 1
        self.total += 1
        self.ke += r.kahler_einstein

    def histogram(self) -> dict[str, int]:
        out = {f"B{k}": v for k, v in sorted(self.strict.items())}
        out["Binf"] = self.periodic
        return out


@dataclass
class CensusResult:
    rows: list[CensusRow]
    records: list[ResultRecord]
    errors: list[tuple[str, str]]
    duplicates: int = 0
    computed: int = 0
    reused: int = 0

    def row(self, dimension: int, index: int) -> CensusRow:
        for r in self.rows:
            if r.dimension == dimension and r.index == index:
                return r
        raise KeyError((dimension, index))

    def _columns(self) -> int:
        return max([max(r.strict, default=-1) for r in self.rows], default=-1) + 1

    def to_text(self) -> str:
        ncols = max(self._columns(), 1)
        head = ["dim", "index"] + [f"B{k}" for k in range(ncols)] + ["Binf", "unres", "Total", "KE"]
        body = []
        for r in self.rows:
            body.append([r.dimension, r.index] + [r.strict.get(k, 0) for k in range(ncols)]
                        + [r.periodic, r.unresolved, r.total, r.ke])
        widths = [max(len(str(x)) for x in col) for col in zip(head, *body)]
        lines = [" | ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in [head] + body]
        lines.insert(1, "-+-".join("-" * w for w in widths))
        if self.errors:
            lines.append(f"rejected inputs: {len(self.errors)}")
            lines.extend(f"  {i}: {msg}" for i, msg in self.errors)
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        ncols = max(self._columns(), 1)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["dimension", "index"] + [f"B{k}" for k in range(ncols)] + ["Binf", "unresolved", "total", "KE"])
        for r in self.rows:
            w.writerow([r.dimension, r.index] + [r.strict.get(k, 0) for k in range(ncols)]
                       + [r.periodic, r.unresolved, r.total, r.ke])
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [{"dimension": r.dimension, "index": r.index, "strict": {str(k): v for k, v in sorted(r.strict.items())},
                 "Binf": r.periodic, "unresolved": r.unresolved, "total": r.total, "KE": r.ke} for r in self.rows]
        return json.dumps({"rows": rows, "errors": [list(e) for e in self.errors],
                           "duplicates": self.duplicates}, indent=1, sort_keys=True) + "\n"

    def format(self, fmt: str) -> str:
        return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def census(
    polytopes: Iterable,
    budget: int = DEFAULT_BUDGET,
    dedupe: bool = True,
    smooth_only: bool = False,
    index: int | None = None,
    store: ResultStore | None = None,
    workers: int = 1,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
) -> CensusResult:
    """Classify a stream of polytopes and count strict types per (dimension, index).

    Items may be :class:`PolytopeRecord`, :class:`FanoPolytope` or bare vertex
    lists. Non-Fano inputs are reported in ``errors``, never dropped silently.
    """
    errors: list[tuple[str, str]] = []
    todo: list[tuple[str, FanoPolytope, str]] = []
    seen: set[str] = set()
    duplicates = 0
    for item in polytopes:
        if isinstance(item, FanoPolytope):
            rec = make_record(item.vertices)
        elif isinstance(item, PolytopeRecord):
            rec = item
        else:
            rec = make_record(item)
        try:
            p = validate_fano(rec.vertices)
        except (ValueError, IndexError) as e:
            errors.append((rec.id, str(e)))
            continue
        if isinstance(p, FanoFailure):
            errors.append((rec.id, f"not Fano: {p}"))
            continue
        if smooth_only and not is_smooth(p):
            continue
        if index is not None and gorenstein_index(p) != index:
            continue
        key = canonical_key(p).decode("ascii")
        if dedupe:
            if key in seen:
                duplicates += 1
                continue
            seen.add(key)
        todo.append((rec.id, p, key))

    reusable = store.reusable() if store is not None else {}
    records: list[ResultRecord] = []
    jobs = []
    for id, p, key in todo:
        if key in reusable:
            records.append(reusable[key])
        else:
            jobs.append((list(p.vertices), id, budget, max_hull_vertices))
    reused = len(records)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            fresh = list(ex.map(_analyze_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        fresh = [_analyze_job(j) for j in jobs]
    for r in fresh:
        if store is not None:
            store.append(r)
    records.extend(fresh)
    records.sort(key=lambda r: (r.dimension, r.gorenstein_index, r.canonical_key))

    groups: dict[tuple[int, int], CensusRow] = {}
    for r in records:
        g = (r.dimension, r.gorenstein_index)
        groups.setdefault(g, CensusRow(*g)).add(r)
    rows = [groups[g] for g in sorted(groups)]
    return CensusResult(rows, records, errors, duplicates, len(fresh), reused)
