"""Spread indicators: MS over the objective space, MAS over the architectural space."""

from __future__ import annotations

import math

import numpy as np
from scipy import stats

from .distance import DistanceWeights, distance_matrix
from .encoding import EncodingTable
from .model import CorrelationStats, DistanceMatrix, IndicatorResult, SolutionSet


def max_spread(solution_set: SolutionSet) -> float:
    """Root-sum-square of per-objective ranges.

    Equivalent to the pairwise form: the largest squared difference over all
    solution pairs in one objective is the squared range of that objective.
    """
    if len(solution_set.solutions) == 0:
        raise ValueError("empty solution set")
    obj = np.array([s.objectives for s in solution_set.solutions], dtype=float)
    if obj.size == 0:
        return 0.0
    ranges = obj.max(axis=0) - obj.min(axis=0)
    return float(np.sqrt(np.sum(ranges**2)))


def max_architectural_spread(
    dm: DistanceMatrix,
    max_d_override: float | None = None,
    all_pairs: bool = False,
) -> float:
    """Normalized root-mean-square of per-solution eccentricities, in [0, 1].

    The eccentricity of a solution is its maximum distance to any other
    solution in the set. With ``all_pairs=True`` every solution's summand is
    replaced by the global maximum pairwise distance (compatibility reading;
    it saturates at 1 as soon as any single pair attains ``max_d``).
    """
    max_d = float(dm.max_d if max_d_override is None else max_d_override)
    if max_d < 0:
        raise ValueError("max_d must be non-negative")
    n = len(dm)
    if n <= 1:
        return 0.0
    if max_d == 0.0:
        # Degenerate scale: all sequences empty, no spread is expressible.
        return 0.0
    values = np.array(dm.values, dtype=float)
    if all_pairs:
        ecc = np.full(n, values.max())
    else:
        ecc = values.max(axis=1)
    # fsum is exact, so the result cannot depend on solution order.
    return math.sqrt(math.fsum(float(e) * float(e) for e in ecc) / (n * max_d**2))


def indicators_for(
    sets: list[SolutionSet],
    table: EncodingTable,
    w: DistanceWeights,
    shared_max_d: bool = True,
    all_pairs: bool = False,
) -> list[IndicatorResult]:
    """One IndicatorResult per set.

    By default MAS is normalized by a shared max_d (the largest padded length
    over all sets) so values are comparable across sets; ``shared_max_d=False``
    normalizes each set by its own longest sequence.
    """
    matrices = [distance_matrix(s, table, w) for s in sets]
    shared = float(max((dm.l_pad for dm in matrices), default=0))
    results = []
    for s, dm in zip(sets, matrices):
        max_d = shared if shared_max_d else dm.max_d
        diagnostics: tuple[str, ...] = ()
        if max_d == 0.0 and len(dm) > 1:
            diagnostics = ("degenerate scale: max_d is 0 (all sequences empty)",)
        results.append(
            IndicatorResult(
                set_label=s.label,
                ms=max_spread(s),
                mas=max_architectural_spread(dm, max_d_override=max_d, all_pairs=all_pairs),
                n=len(s),
                max_d=max_d,
                o=len(s.objective_names),
                l_pad=dm.l_pad,
                diagnostics=diagnostics,
            )
        )
    return results


def spread_correlation(results: list[IndicatorResult]) -> CorrelationStats:
    """Pearson and Spearman correlation between the MS and MAS columns.

    Purely descriptive; a zero-variance column makes the corresponding
    coefficient not computable and is flagged rather than reported as NaN.
    """
    if len(results) < 3:
        raise ValueError("correlation needs at least 3 sets")
    ms = np.array([r.ms for r in results])
    mas = np.array([r.mas for r in results])
    degenerate = float(np.std(ms)) == 0.0 or float(np.std(mas)) == 0.0
    if degenerate:
        return CorrelationStats(len(results), None, None, False, False)
    pearson = float(stats.pearsonr(ms, mas).statistic)
    spearman = float(stats.spearmanr(ms, mas).statistic)
    return CorrelationStats(
        n=len(results),
        pearson=pearson if math.isfinite(pearson) else None,
        spearman=spearman if math.isfinite(spearman) else None,
        pearson_computable=math.isfinite(pearson),
        spearman_computable=math.isfinite(spearman),
    )
