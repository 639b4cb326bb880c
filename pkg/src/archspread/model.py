"""Core domain types shared by every other module."""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class TransformationStep:
    """One refactoring: a name plus the ordered arguments it targets."""

    name: str
    args: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.name.strip():
            raise ValueError("transformation name must be non-empty")
        object.__setattr__(self, "args", tuple(self.args))
        if any(not a for a in self.args):
            raise ValueError(f"transformation {self.name!r} has an empty argument token")


@dataclass(frozen=True)
class ArchitectureSolution:
    """A design alternative: objective values plus the refactoring path from the root."""

    id: str
    objectives: tuple[float, ...]
    sequence: tuple[TransformationStep, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "objectives", tuple(float(v) for v in self.objectives))
        object.__setattr__(self, "sequence", tuple(self.sequence))


@dataclass(frozen=True)
class SolutionSet:
    """A labeled collection of solutions produced by one optimization configuration."""

    label: str
    objective_names: tuple[str, ...]
    solutions: tuple[ArchitectureSolution, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objective_names", tuple(self.objective_names))
        object.__setattr__(self, "solutions", tuple(self.solutions))

    def __len__(self) -> int:
        return len(self.solutions)


@dataclass(frozen=True)
class SearchTree:
    """Search tree (or DAG) rooted at the initial architecture.

    ``edges`` holds ``(parent_id, child_id, step)`` triples.
    """

    nodes: dict[str, str]
    root_id: str
    edges: tuple[tuple[str, str, TransformationStep], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.root_id not in self.nodes:
            raise ValueError(f"root id {self.root_id!r} is not a node")
        for parent, child, _ in self.edges:
            if parent not in self.nodes or child not in self.nodes:
                raise ValueError(f"edge ({parent!r}, {child!r}) references unknown node")

    def children(self) -> dict[str, list[tuple[str, TransformationStep]]]:
        """Adjacency map parent -> [(child, step)], children sorted by id."""
        adj: dict[str, list[tuple[str, TransformationStep]]] = {n: [] for n in self.nodes}
        for parent, child, step in self.edges:
            adj[parent].append((child, step))
        for lst in adj.values():
            lst.sort(key=lambda e: e[0])
        return adj


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of architectural distances between a set's solutions."""

    ids: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]
    l_pad: int
    max_d: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(
            self, "values", tuple(tuple(float(v) for v in row) for row in self.values)
        )
        n = len(self.ids)
        if len(self.values) != n or any(len(row) != n for row in self.values):
            raise ValueError("distance matrix shape does not match ids")
        for i in range(n):
            if self.values[i][i] != 0.0:
                raise ValueError(f"nonzero diagonal at {self.ids[i]!r}")
            for j in range(i + 1, n):
                if self.values[i][j] != self.values[j][i]:
                    raise ValueError(f"asymmetry at ({self.ids[i]!r}, {self.ids[j]!r})")
                if not (0.0 <= self.values[i][j] <= self.l_pad + 1e-9):
                    raise ValueError(f"distance out of [0, L] at ({self.ids[i]!r}, {self.ids[j]!r})")

    def __len__(self) -> int:
        return len(self.ids)


@dataclass(frozen=True)
class IndicatorReport:
    """Per-set indicator values plus cross-set correlation statistics."""

    results: tuple["IndicatorResult", ...]
    correlation: "CorrelationStats | None" = None


@dataclass(frozen=True)
class IndicatorResult:
    """Spread values for one solution set."""

    set_label: str
    ms: float
    mas: float
    n: int
    max_d: float
    o: int
    l_pad: int = 0
    diagnostics: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class CorrelationStats:
    """Descriptive correlation between the objective-space and architectural spreads."""

    n: int
    pearson: float | None
    spearman: float | None
    pearson_computable: bool
    spearman_computable: bool


def validate_solution_set(solution_set: SolutionSet) -> list[str]:
    """Check a set against the domain invariants.

    Violations come back as human-readable descriptions naming the offending
    solution id and the rule; a valid set yields an empty list.
    """
    violations: list[str] = []
    if len(solution_set.solutions) == 0:
        violations.append(f"set {solution_set.label!r}: must contain at least one solution")
    seen: set[str] = set()
    for sol in solution_set.solutions:
        if sol.id in seen:
            violations.append(f"solution {sol.id!r}: duplicate id")
        seen.add(sol.id)
        if len(sol.objectives) != len(solution_set.objective_names):
            violations.append(
                f"solution {sol.id!r}: {len(sol.objectives)} objectives, "
                f"expected {len(solution_set.objective_names)}"
            )
        for k, v in enumerate(sol.objectives):
            if not math.isfinite(v):
                violations.append(f"solution {sol.id!r}: objective {k} is not finite")
    return violations
