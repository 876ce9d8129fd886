"""Iterating the B-transformation: strict types, periodicity and orbits."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Union

from .canonical import CanonicalKey, canonical_key
from .fano import (
    FanoFailure,
    FanoPolytope,
    b_transform,
    is_kahler_einstein,
    is_smooth,
    is_symmetric,
    validate_fano,
)
from .geometry import VPolytope

DEFAULT_BUDGET = 64
DEFAULT_MAX_HULL_VERTICES = 10**6


@dataclass(frozen=True)
class StrictType:
    k: int
    reason: FanoFailure

    def label(self) -> str:
        return f"B{self.k}"

    def to_dict(self) -> dict:
        return {"kind": "strict", "k": self.k, "reason": str(self.reason)}


@dataclass(frozen=True)
class PeriodicBInfinity:
    preperiod: int
    period: int

    def label(self) -> str:
        return "Binf"

    def to_dict(self) -> dict:
        return {"kind": "periodic", "preperiod": self.preperiod, "period": self.period}


@dataclass(frozen=True)
class Unresolved:
    """At least of type B_budget; nothing more is known."""

    budget: int
    resource_abort: bool = False

    def label(self) -> str:
        return "unresolved"

    def to_dict(self) -> dict:
        return {"kind": "unresolved", "budget": self.budget, "resource_abort": self.resource_abort}


TypeVerdict = Union[StrictType, PeriodicBInfinity, Unresolved]


def verdict_from_dict(d: dict) -> TypeVerdict:
    kind = d["kind"]
    if kind == "strict":
        return StrictType(d["k"], FanoFailure(d["reason"]))
    if kind == "periodic":
        return PeriodicBInfinity(d["preperiod"], d["period"])
    if kind == "unresolved":
        return Unresolved(d["budget"], d.get("resource_abort", False))
    raise ValueError(f"unknown verdict kind {kind!r}")


@dataclass(frozen=True, eq=False)
class TrajectoryStep:
    step: int
    polytope: FanoPolytope
    key: CanonicalKey

    @property
    def vertex_count(self) -> int:
        return len(self.polytope.vertices)

    @cached_property
    def kahler_einstein(self) -> bool:
        return is_kahler_einstein(self.polytope)

    @cached_property
    def symmetric(self) -> bool:
        return is_symmetric(self.polytope)

    @cached_property
    def smooth(self) -> bool:
        return is_smooth(self.polytope)


@dataclass
class Trajectory:
    steps: list[TrajectoryStep] = field(default_factory=list)
    # B of the last step when that image is not Fano
    terminal: VPolytope | None = None

    def __len__(self):
        return len(self.steps)

    def __getitem__(self, i) -> TrajectoryStep:
        return self.steps[i]

    @property
    def keys(self) -> list[CanonicalKey]:
        return [s.key for s in self.steps]

    @property
    def vertex_counts(self) -> list[int]:
        return [s.vertex_count for s in self.steps]


def classify(
    p: FanoPolytope,
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
    min_steps: int = 0,
) -> tuple[TypeVerdict, Trajectory]:
    """Iterate B until failure, a repeated canonical key, or the budget.

    ``min_steps`` keeps extending the trajectory after a period is found
    (the verdict is unaffected); it never goes past a failure.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    traj = Trajectory([TrajectoryStep(0, p, canonical_key(p))])
    seen = {traj.steps[0].key: 0}
    verdict: TypeVerdict | None = None
    q = p
    n = 0
    while True:
        n += 1
        if verdict is None and n > budget:
            verdict = Unresolved(budget)
            break
        if len(q.facets) > max_hull_vertices:
            verdict = verdict or Unresolved(budget, resource_abort=True)
            break
        img = b_transform(q)
        if len(img.vertices) > max_hull_vertices:
            verdict = verdict or Unresolved(budget, resource_abort=True)
            break
        r = validate_fano(img)
        if isinstance(r, FanoFailure):
            traj.terminal = img
            verdict = verdict or StrictType(n - 1, r)
            break
        key = canonical_key(r)
        traj.steps.append(TrajectoryStep(n, r, key))
        if verdict is None and key in seen:
            verdict = PeriodicBInfinity(seen[key], n - seen[key])
        seen.setdefault(key, n)
        q = r
        if verdict is not None and n >= min_steps:
            break
    return verdict, traj


class OrbitClasses(NamedTuple):
    keys: frozenset
    complete: bool


def orbit_classes(
    p: FanoPolytope, budget: int = DEFAULT_BUDGET, include_start: bool = True
) -> OrbitClasses:
    """Distinct equivalence classes among B^n(P) (n >= 0, or n >= 1)."""
    verdict, traj = classify(p, budget)
    steps = traj.steps if include_start else traj.steps[1:]
    return OrbitClasses(frozenset(s.key for s in steps), isinstance(verdict, PeriodicBInfinity))


def vertex_count_sequence(verdict: TypeVerdict, traj: Trajectory, length: int) -> list[int]:
    """Vertex counts of B^0..B^(length-1), extended around a detected cycle."""
    counts = traj.vertex_counts
    if isinstance(verdict, PeriodicBInfinity):
        t, k = verdict.preperiod, verdict.period
        while len(counts) < length:
            counts.append(counts[t + (len(counts) - t) % k])
    return counts[:length]


def is_pseudo_periodic(p: FanoPolytope, budget: int = DEFAULT_BUDGET, window: int = 4) -> bool:
    """Heuristic: vertex count stays constant for ``window`` further steps.

    Finite evidence only; a True answer does not prove pseudo-periodicity.
    """
    if not budget > window >= 2:
        raise ValueError("need budget > window >= 2")
    verdict, traj = classify(p, budget)
    counts = vertex_count_sequence(verdict, traj, budget + 1)
    for k in range(0, budget - window + 1):
        run = counts[k:k + window + 1]
        if len(run) == window + 1 and len(set(run)) == 1:
            return True
    return False


def recompute_step(p: FanoPolytope, n: int) -> FanoPolytope | FanoFailure:
    """B^n(P) from scratch, without any trajectory bookkeeping."""
    q: FanoPolytope | FanoFailure = p
    for _ in range(n):
        q = validate_fano(b_transform(q))
        if isinstance(q, FanoFailure):
            return q
    return q
