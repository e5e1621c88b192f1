"""Diversity metrics over summary locations, plus 1-D natural-breaks classing.

Abundances are relative frequencies of location types counted over summary
units (one count per unit). The effective-number-of-types family unifies the
classic indices: order 0 is the plain type count, order 1 the exponential of
the Shannon index, order 2 the inverse Simpson index. Higher orders weigh
common types more, so the value never increases with the order.

Natural-breaks classing partitions a sorted value sequence into k contiguous
classes minimizing the within-class sum of squared deviations, solved
exactly by dynamic programming; fit quality is the classic
goodness-of-variance-fit ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import pairwise
from typing import Sequence

import numpy as np

from trajsum.core import SummaryTrajectory, unit_frequency_table

_SUM_TOL = 1e-9


def _as_abundance(proportions) -> np.ndarray:
    p = np.asarray(proportions, dtype=np.float64)
    if p.ndim != 1 or p.size == 0:
        raise ValueError("abundance vector must be non-empty and one-dimensional")
    if np.any(p <= 0):
        raise ValueError("abundance proportions must be strictly positive")
    if abs(float(p.sum()) - 1.0) > _SUM_TOL:
        raise ValueError("abundance proportions must sum to 1")
    return p


def abundance(summary: SummaryTrajectory) -> np.ndarray:
    """Relative frequencies of unit locations, most common first."""
    if not summary.units:
        raise ValueError("abundance undefined for an empty summary")
    counts = unit_frequency_table(summary).ranked_counts()
    return counts / counts.sum()


def shannon_index(proportions) -> float:
    """Shannon entropy of the type distribution, in nats."""
    p = _as_abundance(proportions)
    return float(-(p * np.log(p)).sum())


def simpson_index(proportions) -> float:
    """Probability that two independent draws are the same type."""
    p = _as_abundance(proportions)
    return float((p * p).sum())


def true_diversity(proportions, q: float) -> float:
    """Effective number of equally common types at diversity order q.

    Order 0 is richness; order 1 (the limit) is exp of the Shannon index;
    order 2 is the inverse Simpson index.
    """
    p = _as_abundance(proportions)
    if not math.isfinite(q) or q < 0:
        raise ValueError("diversity order must be finite and non-negative")
    if q == 0:
        return float(p.size)
    if q == 1:
        return math.exp(float(-(p * np.log(p)).sum()))
    if q == 2:
        return 1.0 / float((p * p).sum())
    return float((p**q).sum() ** (1.0 / (1.0 - q)))


@dataclass(frozen=True, slots=True)
class DiversityProfile:
    """Per-trajectory triple: richness plus effective types at orders 1 and 2."""

    richness: int
    td_h: float
    td_s: float


def diversity_profile(summary: SummaryTrajectory) -> DiversityProfile:
    p = abundance(summary)
    return DiversityProfile(
        richness=int(p.size),
        td_h=true_diversity(p, 1),
        td_s=true_diversity(p, 2),
    )


def _check_sorted_values(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError("values must be one-dimensional")
    if v.size and np.any(np.diff(v) < 0):
        raise ValueError("values must be sorted ascending")
    return v


def jenks_breaks(values, k: int) -> tuple[int, ...]:
    """Optimal k-class contiguous partition of sorted values.

    Returns the k-1 break indices: class m is values[breaks[m-1]:breaks[m]]
    with implicit bounds 0 and len(values). Minimizes the total within-class
    sum of squared deviations; among optima, the lexicographically smallest
    break vector is returned. O(k * n^2) time, exact.
    """
    v = _check_sorted_values(values)
    n = v.size
    if not 1 <= k <= n:
        raise ValueError(f"class count must be in [1, {n}], got {k}")
    if k == 1:
        return ()

    s1 = np.concatenate(([0.0], np.cumsum(v)))
    s2 = np.concatenate(([0.0], np.cumsum(v * v)))

    def sse_to(i: int, js: np.ndarray) -> np.ndarray:
        # within-class squared deviation of v[i:j] for a vector of ends j
        m = js - i
        d = s1[js] - s1[i]
        return (s2[js] - s2[i]) - d * d / m

    # suffix[c][i]: minimal cost of splitting v[i:] into c classes
    suffix = np.full((k + 1, n + 1), np.inf)
    ends = np.array([n])
    for i in range(n):
        suffix[1, i] = sse_to(i, ends)[0]
    for c in range(2, k + 1):
        for i in range(n - c + 1):
            js = np.arange(i + 1, n - c + 2)
            suffix[c, i] = (sse_to(i, js) + suffix[c - 1, js]).min()

    # walk forward, taking the smallest cut that attains the optimum; ties are
    # detected with a relative tolerance so that float noise between equal-cost
    # partitions cannot override the lexicographic preference
    breaks = []
    i = 0
    for c in range(k, 1, -1):
        js = np.arange(i + 1, n - c + 2)
        candidates = sse_to(i, js) + suffix[c - 1, js]
        target = suffix[c, i]
        tol = 1e-9 * (1.0 + abs(target))
        j = int(js[np.argmax(candidates <= target + tol)])
        breaks.append(j)
        i = j
    return tuple(breaks)


def gvf(values, breaks: Sequence[int]) -> float:
    """Goodness of variance fit of a contiguous partition, in [0, 1].

    1 means each class is internally constant; a single class scores 0.
    Degenerate all-equal data fits perfectly, so it scores 1.
    """
    v = _check_sorted_values(values)
    n = v.size
    if n == 0:
        raise ValueError("values must be non-empty")
    bounds = [0, *breaks, n]
    for a, b in pairwise(bounds):
        if not 0 <= a < b <= n:
            raise ValueError(f"invalid break vector {tuple(breaks)}")
    sdam = float(((v - v.mean()) ** 2).sum())
    if sdam == 0.0:
        return 1.0
    sdcm = sum(
        float(((v[a:b] - v[a:b].mean()) ** 2).sum()) for a, b in pairwise(bounds)
    )
    return (sdam - sdcm) / sdam


@dataclass(frozen=True)
class UserClassification:
    """Result of threshold-driven natural-breaks classing of one value per user."""

    k: int
    gvf: float
    break_values: tuple[float, ...]
    class_ranges: tuple[tuple[float, float], ...]
    class_shares: tuple[float, ...]


def classify_users(values, threshold: float = 0.7) -> UserClassification:
    """Class the population with the smallest k whose fit reaches the threshold."""
    v = np.sort(np.asarray(values, dtype=np.float64))
    n = v.size
    if n == 0:
        raise ValueError("cannot classify an empty population")
    breaks: tuple[int, ...] = ()
    fit = 0.0
    for k in range(1, n + 1):
        breaks = jenks_breaks(v, k)
        fit = gvf(v, breaks)
        if fit >= threshold:
            break
    bounds = [0, *breaks, n]
    return UserClassification(
        k=len(bounds) - 1,
        gvf=fit,
        break_values=tuple(float(v[j]) for j in breaks),
        class_ranges=tuple(
            (float(v[a]), float(v[b - 1])) for a, b in pairwise(bounds)
        ),
        class_shares=tuple((b - a) / n for a, b in pairwise(bounds)),
    )
