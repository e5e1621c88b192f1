"""Location taxonomy: crossing visit frequency with attractiveness.

With n the number of attractive (summary) locations, the top-n most
frequented native locations are compared set-wise against the attractive
set. Locations that are both frequent and attractive are significant; the
frequent-only ones are transit; the attractive-only ones are sporadic; the
rest are insignificant. By construction transit and sporadic have the same
cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from typing import Sequence

from trajsum.core import (
    LocationSymbol,
    SummaryTrajectory,
    SymbolicTrajectory,
    distinct_locations,
    frequency_table,
)
from trajsum.seqscan import _check_aligned


@dataclass(frozen=True)
class TaxonomyPartition:
    """Disjoint location classes covering every distinct native location."""

    significant: frozenset[LocationSymbol]
    transit: frozenset[LocationSymbol]
    sporadic: frozenset[LocationSymbol]
    insignificant: frozenset[LocationSymbol]
    n_native_types: int

    @property
    def percentages(self) -> dict[str, float]:
        """Share of native location types per class (fractions in [0, 1])."""
        n = self.n_native_types
        if n == 0:
            return {"significant": 0.0, "transit": 0.0, "sporadic": 0.0,
                    "insignificant": 0.0}
        return {
            "significant": len(self.significant) / n,
            "transit": len(self.transit) / n,
            "sporadic": len(self.sporadic) / n,
            "insignificant": len(self.insignificant) / n,
        }


def top_n_frequent(trajectory: SymbolicTrajectory, n: int) -> frozenset[LocationSymbol]:
    """The n most frequented locations under the deterministic ranking."""
    return frozenset(frequency_table(trajectory).top(n))


def classify_locations(
    trajectory: SymbolicTrajectory, summary: SummaryTrajectory
) -> TaxonomyPartition:
    """Partition the native locations into the four taxonomy classes.

    n equals the number of attractive locations; it cannot exceed the number
    of native types because a summary never invents symbols.
    """
    native = distinct_locations(trajectory)
    attractive = summary.locations()
    frequent = top_n_frequent(trajectory, len(attractive))
    return TaxonomyPartition(
        significant=frequent & attractive,
        transit=frequent - attractive,
        sporadic=attractive - frequent,
        insignificant=native - (attractive | frequent),
        n_native_types=len(native),
    )


def matching_degree(
    trajectory: SymbolicTrajectory, summary: SummaryTrajectory
) -> int:
    """Largest k such that the k most frequented locations are all attractive."""
    attractive = summary.locations()
    k = 0
    for location in frequency_table(trajectory).ranking:
        if location not in attractive:
            break
        k += 1
    return k


@dataclass(frozen=True, slots=True)
class ClassPercentages:
    """Dataset-level mean share of each taxonomy class (fractions in [0, 1])."""

    significant: float
    transit: float
    sporadic: float
    insignificant: float


def class_percentages(
    dataset: Sequence[SymbolicTrajectory], summaries: Sequence[SummaryTrajectory]
) -> ClassPercentages:
    """Unweighted mean of per-trajectory class shares.

    Trajectories without any location are skipped (their shares are undefined).
    """
    _check_aligned(dataset, summaries)
    rows = [
        classify_locations(t, s).percentages
        for t, s in zip(dataset, summaries)
        if len(t.points) > 0
    ]
    if not rows:
        raise ValueError("no non-empty trajectories to average")
    return ClassPercentages(
        significant=fmean(r["significant"] for r in rows),
        transit=fmean(r["transit"] for r in rows),
        sporadic=fmean(r["sporadic"] for r in rows),
        insignificant=fmean(r["insignificant"] for r in rows),
    )
