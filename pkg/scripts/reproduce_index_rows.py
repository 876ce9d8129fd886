"""Strict-type table of Fano polygons by Gorenstein index, from the enumerator.

Each row is computed at a coordinate box B and recomputed at B+1; a row is
flagged "stable" when both boxes give the same set of classes.

    python3 scripts/reproduce_index_rows.py --max-index 3 --box 6
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from barytrans.census import CensusResult, census
from barytrans.enumerate import enumerate_fano_polygons


@dataclass
class Config:
    max_index: int = 3
    box: int = 6
    max_vertices: int = 8
    budget: int = 64
    workers: int = 1
    fmt: str = "text"


def row_for(idx: int, box: int, cfg: Config) -> CensusResult:
    return census(enumerate_fano_polygons(box, cfg.max_vertices, idx), budget=cfg.budget,
                  index=idx, workers=cfg.workers)


def run(cfg: Config, out=sys.stdout) -> list[CensusResult]:
    results = []
    for idx in range(1, cfg.max_index + 1):
        t0 = time.time()
        res = row_for(idx, cfg.box, cfg)
        bigger = row_for(idx, cfg.box + 1, cfg)
        stable = {r.canonical_key for r in res.records} == {r.canonical_key for r in bigger.records}
        results.append(res)
        out.write(f"# index {idx}: box {cfg.box}, stable at {cfg.box + 1}: {stable}, {time.time() - t0:.1f}s\n")
    merged = CensusResult([r for res in results for r in res.rows], [x for res in results for x in res.records], [])
    out.write(merged.format(cfg.fmt))
    return results


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-index", type=int, default=Config.max_index)
    ap.add_argument("--box", type=int, default=Config.box)
    ap.add_argument("--max-vertices", type=int, default=Config.max_vertices)
    ap.add_argument("--budget", type=int, default=Config.budget)
    ap.add_argument("--workers", type=int, default=Config.workers)
    ap.add_argument("--format", dest="fmt", choices=("text", "csv", "json"), default=Config.fmt)
    run(Config(**vars(ap.parse_args(argv))))
    return 0


if __name__ == "__main__":
    sys.exit(main())
