"""Print the trajectory, verdict and predicates of every named example polygon."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from barytrans.classify import classify
from barytrans.fano import (
    FanoPolytope,
    barycenter,
    cube,
    gorenstein_index,
    is_kahler_einstein,
    is_symmetric,
    s_mn,
)
from barytrans.formats import vertices_text

EXAMPLES = {
    "badbehavior-1": [(2, -1), (0, 1), (-1, 0)],
    "badbehavior-2": [(1, -2), (0, 1), (-1, -2)],
    "strict-B1": [(0, 1), (3, -2), (-4, 1)],
    "toKE": [(-25, -12), (-5, -6), (25, 14)],
    "hexagon": [(3, -1), (3, 1), (1, 2), (-3, 1), (-3, -1), (-1, -2)],
    "bzero-P1": [(-2, -1), (-1, 3), (1, 2), (2, -3)],
    "bzero-P2": [(-5, -4), (-5, 8), (5, 1), (8, -5)],
}


@dataclass
class Config:
    names: list[str] = field(default_factory=lambda: list(EXAMPLES) + ["S21", "cube3"])
    min_steps: int = 4


def _polytope(name: str) -> FanoPolytope:
    if name in EXAMPLES:
        return FanoPolytope.from_points(EXAMPLES[name])
    if name.startswith("S") and len(name) == 3:
        return s_mn(int(name[1]), int(name[2]))
    if name.startswith("cube"):
        return cube(int(name[4:]))
    raise KeyError(name)


def _point(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def run(cfg: Config, out=sys.stdout) -> None:
    for name in cfg.names:
        p = _polytope(name)
        verdict, traj = classify(p, min_steps=cfg.min_steps)
        out.write(f"== {name}: {vertices_text(p.vertices)}\n")
        out.write(f"   index {gorenstein_index(p)}, barycenter {_point(barycenter(p))}, verdict {verdict.to_dict()}\n")
        for s in traj.steps:
            q = s.polytope
            out.write(f"   B^{s.step}: {vertices_text(q.vertices)}  KE={is_kahler_einstein(q)} "
                      f"sym={is_symmetric(q)} smooth={s.smooth}\n")
        if traj.terminal is not None:
            out.write(f"   B^{len(traj)}: {vertices_text(traj.terminal.vertices)}  (not Fano)\n")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=Config().names)
    ap.add_argument("--min-steps", type=int, default=Config.min_steps)
    run(Config(**vars(ap.parse_args(argv))))
    return 0


if __name__ == "__main__":
    sys.exit(main())
