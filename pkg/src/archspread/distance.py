"""Architectural distance between encoded refactoring sequences.

Each aligned position contributes at most 1: a 0/1 name mismatch weighted by
``w_pred`` plus a length-normalized Levenshtein over the argument symbols
weighted by ``w_args``. Sequences of different lengths are tail-padded with a
sentinel step that is at distance 1 from every real step.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .encoding import PAD, EncodedStep, EncodingTable
from .model import DistanceMatrix, SolutionSet


@dataclass(frozen=True)
class DistanceWeights:
    """Channel weights; they must sum to 1 so a position contributes at most 1."""

    w_pred: float = 0.5
    w_args: float = 0.5

    def __post_init__(self) -> None:
        if not (0.0 <= self.w_pred <= 1.0 and 0.0 <= self.w_args <= 1.0):
            raise ValueError("weights must lie in [0, 1]")
        if abs(self.w_pred + self.w_args - 1.0) > 1e-12:
            raise ValueError("weights must sum to 1")


@lru_cache(maxsize=None)
def _levenshtein(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    if not a:
        return len(b)
    if not b:
        return len(a)
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def _simargs(a: tuple[int, ...], b: tuple[int, ...]) -> float:
    longer = max(len(a), len(b))
    if longer == 0:
        return 0.0
    return _levenshtein(a, b) / longer


def step_distance(a: EncodedStep, b: EncodedStep, w: DistanceWeights) -> float:
    """Distance between two aligned steps, in [0, 1]."""
    a_pad = a == PAD
    b_pad = b == PAD
    if a_pad and b_pad:
        return 0.0
    if a_pad or b_pad:
        return 1.0
    simpred = 0.0 if a.name == b.name else 1.0
    return simpred * w.w_pred + _simargs(a.args, b.args) * w.w_args


def sequence_distance(
    a: tuple[EncodedStep, ...], b: tuple[EncodedStep, ...], w: DistanceWeights
) -> float:
    """Sum of per-position step distances after tail-padding to equal length.

    Result lies in [0, max(|a|, |b|)]; two empty sequences are at distance 0.
    """
    length = max(len(a), len(b))
    total = 0.0
    for k in range(length):
        sa = a[k] if k < len(a) else PAD
        sb = b[k] if k < len(b) else PAD
        total += step_distance(sa, sb, w)
    return total


def distance_matrix(
    solution_set: SolutionSet, table: EncodingTable, w: DistanceWeights
) -> DistanceMatrix:
    """Full pairwise distance matrix for one set.

    ``l_pad`` is the longest sequence in the set and doubles as the default
    ``max_d`` used for MAS normalization.
    """
    encoded: list[tuple[EncodedStep, ...]] = []
    for sol in solution_set.solutions:
        try:
            encoded.append(table.encode_sequence(sol.sequence))
        except KeyError as exc:
            raise type(exc)(f"solution {sol.id!r}: unknown token {exc.args[0]!r}") from None
    n = len(encoded)
    l_pad = max((len(seq) for seq in encoded), default=0)
    values = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = sequence_distance(encoded[i], encoded[j], w)
            values[i][j] = d
            values[j][i] = d
    return DistanceMatrix(
        ids=tuple(s.id for s in solution_set.solutions),
        values=tuple(tuple(row) for row in values),
        l_pad=l_pad,
        max_d=float(l_pad),
    )
