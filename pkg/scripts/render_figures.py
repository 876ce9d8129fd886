"""Write an SVG trajectory strip for each named example polygon."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from barytrans.classify import classify
from barytrans.fano import FanoPolytope
from barytrans.svg import trajectory_svg

sys.path.insert(0, str(Path(__file__).parent))
from worked_examples import EXAMPLES  # noqa: E402


@dataclass
class Config:
    out_dir: str = "figures"
    min_steps: int = 3


def run(cfg: Config) -> list[Path]:
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, pts in EXAMPLES.items():
        verdict, traj = classify(FanoPolytope.from_points(pts), min_steps=cfg.min_steps)
        path = out / f"{name}.svg"
        path.write_text(trajectory_svg(verdict, traj), encoding="utf-8")
        written.append(path)
    return written


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=Config.out_dir)
    ap.add_argument("--min-steps", type=int, default=Config.min_steps)
    for p in run(Config(**vars(ap.parse_args(argv)))):
        print(p)
    return 0


if __name__ == "__main__":
    sys.exit(main())
