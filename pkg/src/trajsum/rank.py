"""Visit-probability distributions over location ranks.

Rank r is assigned by the deterministic frequency ranking; the distribution
P(r) gives the probability of finding the user at their rank-r location. For
summaries, occurrences are counted per unit so the distribution describes
attractive-location visits. Dataset distributions are unweighted averages of
per-trajectory distributions, zero-padded to a common rank range so mass is
conserved.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from trajsum.core import (
    SummaryTrajectory,
    SymbolicTrajectory,
    frequency_table,
    unit_frequency_table,
)


def _ranked_counts(item: SymbolicTrajectory | SummaryTrajectory) -> np.ndarray:
    if isinstance(item, SymbolicTrajectory):
        return frequency_table(item).ranked_counts()
    if isinstance(item, SummaryTrajectory):
        return unit_frequency_table(item).ranked_counts()
    raise TypeError(f"expected a trajectory or summary, got {type(item).__name__}")


def rank_distribution(item: SymbolicTrajectory | SummaryTrajectory) -> np.ndarray:
    """P(r) for one trajectory or summary; index 0 holds rank 1."""
    counts = _ranked_counts(item)
    total = counts.sum()
    if total == 0:
        raise ValueError("rank distribution undefined for an empty input")
    return counts / total


def rank_distribution_dataset(
    items: Sequence[SymbolicTrajectory | SummaryTrajectory],
) -> np.ndarray:
    """Mean P(r) over the dataset, zero-padded to the largest rank support.

    Empty trajectories/summaries are skipped (their distribution is undefined).
    """
    distributions = []
    for item in items:
        counts = _ranked_counts(item)
        if counts.sum() > 0:
            distributions.append(counts / counts.sum())
    if not distributions:
        raise ValueError("rank distribution undefined for an all-empty dataset")
    r_max = max(len(d) for d in distributions)
    acc = np.zeros(r_max)
    for d in distributions:
        acc[: len(d)] += d
    return acc / len(distributions)
