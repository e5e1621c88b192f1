"""Domain types shared by all modules, plus frequency ranking and dataset stats.

A symbolic trajectory is a time-ordered sequence of timestamped location
labels drawn from a finite dictionary; there is no geometry here, locations
are pure symbols. Timestamps are seconds (epoch or relative, caller's
choice) and may repeat (bursty uploads), in which case input order is kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True, slots=True, order=True)
class LocationSymbol:
    """Opaque location-area label; equality, ordering and hashing by label."""

    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("location label must be non-empty")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True, slots=True)
class TrajPoint:
    """One timestamped location occurrence."""

    timestamp: float
    location: LocationSymbol

    def __post_init__(self):
        if not math.isfinite(self.timestamp):
            raise ValueError("timestamp must be finite")


@dataclass(frozen=True)
class SymbolicTrajectory:
    """One user's time-ordered sequence of location occurrences.

    Timestamps must be non-decreasing; equal timestamps keep input order.
    """

    user_id: str
    points: tuple[TrajPoint, ...]

    def __post_init__(self):
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        prev = -math.inf
        for p in points:
            if p.timestamp < prev:
                raise ValueError(
                    f"trajectory {self.user_id!r}: timestamps must be non-decreasing"
                )
            prev = p.timestamp

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[TrajPoint]:
        return iter(self.points)


def trajectory_from_pairs(
    user_id: str, pairs: Iterable[tuple[str, float]]
) -> SymbolicTrajectory:
    """Build a trajectory from (label, timestamp) pairs, interning labels."""
    symbols: dict[str, LocationSymbol] = {}
    points = []
    for label, ts in pairs:
        sym = symbols.get(label)
        if sym is None:
            sym = symbols[label] = LocationSymbol(label)
        points.append(TrajPoint(float(ts), sym))
    return SymbolicTrajectory(user_id, tuple(points))


@dataclass(frozen=True, slots=True)
class SummaryUnit:
    """One (interval, dominant location) unit of a summary trajectory.

    `occurrences` counts the dominant symbol's points inside [start, end];
    `weight` is the accumulated gap between consecutive identical points of
    the dominant symbol inside the interval, i.e. the estimated staying time.
    """

    start: float
    end: float
    location: LocationSymbol
    occurrences: int
    weight: float

    def __post_init__(self):
        if self.end < self.start:
            raise ValueError("unit end must not precede start")
        if self.occurrences < 1:
            raise ValueError("unit must contain at least one occurrence")
        span = self.end - self.start
        if self.weight < 0 or self.weight > span + 1e-9 * max(1.0, abs(span)):
            raise ValueError("unit weight must lie in [0, end - start]")

    @property
    def span(self) -> float:
        return self.end - self.start

    @property
    def goodness(self) -> float:
        """Fraction of the unit's span covered by the dominant symbol's weight.

        A zero-length unit is trivially all in its location, hence 1.
        """
        span = self.end - self.start
        return self.weight / span if span > 0 else 1.0


@dataclass(frozen=True)
class SummaryTrajectory:
    """Ordered, temporally non-overlapping summary units for one user."""

    user_id: str
    units: tuple[SummaryUnit, ...]

    def __post_init__(self):
        units = tuple(self.units)
        object.__setattr__(self, "units", units)
        for prev, cur in zip(units, units[1:]):
            if cur.start < prev.end:
                raise ValueError("summary units must not overlap in time")

    def __len__(self) -> int:
        return len(self.units)

    def locations(self) -> frozenset[LocationSymbol]:
        """Distinct attractive locations in this summary."""
        return frozenset(u.location for u in self.units)


@dataclass(frozen=True)
class FrequencyTable:
    """Per-trajectory visit counts with a deterministic total ranking.

    Ranking is by count descending; ties broken by earliest first-occurrence
    timestamp, then label ascending, so re-runs and top-n cuts are stable.
    """

    counts: dict[LocationSymbol, int]
    ranking: tuple[LocationSymbol, ...]

    def __len__(self) -> int:
        return len(self.ranking)

    def top(self, n: int) -> tuple[LocationSymbol, ...]:
        if n < 0 or n > len(self.ranking):
            raise ValueError(f"n must be in [0, {len(self.ranking)}], got {n}")
        return self.ranking[:n]

    def rank_of(self, location: LocationSymbol) -> int:
        """1-based rank of a location; raises KeyError if absent."""
        try:
            return self.ranking.index(location) + 1
        except ValueError:
            raise KeyError(location) from None

    def ranked_counts(self) -> np.ndarray:
        """Counts in ranking order (non-increasing by construction)."""
        return np.array([self.counts[loc] for loc in self.ranking], dtype=np.int64)


def _build_frequency_table(
    occurrences: Iterable[tuple[LocationSymbol, float]],
) -> FrequencyTable:
    counts: dict[LocationSymbol, int] = {}
    first_seen: dict[LocationSymbol, float] = {}
    for loc, ts in occurrences:
        if loc in counts:
            counts[loc] += 1
        else:
            counts[loc] = 1
            first_seen[loc] = ts
    ranking = tuple(
        sorted(counts, key=lambda loc: (-counts[loc], first_seen[loc], loc.label))
    )
    return FrequencyTable(counts, ranking)


def frequency_table(trajectory: SymbolicTrajectory) -> FrequencyTable:
    """Count how many times each location appears in the trajectory."""
    return _build_frequency_table((p.location, p.timestamp) for p in trajectory.points)


def unit_frequency_table(summary: SummaryTrajectory) -> FrequencyTable:
    """Frequency table over summary units: each unit counts once for its location."""
    return _build_frequency_table((u.location, u.start) for u in summary.units)


def distinct_locations(trajectory: SymbolicTrajectory) -> frozenset[LocationSymbol]:
    """The set of distinct location types visited."""
    return frozenset(p.location for p in trajectory.points)


@dataclass(frozen=True, slots=True)
class DatasetStats:
    n_traj: int
    n_records: int
    n_locations: int
    avg_len: float
    std_len: float


def dataset_stats(dataset: Sequence[SymbolicTrajectory]) -> DatasetStats:
    """Dataset-level counts plus mean/population-std of trajectory lengths."""
    if not dataset:
        return DatasetStats(0, 0, 0, 0.0, 0.0)
    lengths = np.array([len(t) for t in dataset], dtype=np.int64)
    all_locations: set[LocationSymbol] = set()
    for t in dataset:
        all_locations.update(distinct_locations(t))
    return DatasetStats(
        n_traj=len(dataset),
        n_records=int(lengths.sum()),
        n_locations=len(all_locations),
        avg_len=float(lengths.mean()),
        std_len=float(lengths.std()),
    )


def encode_labels(labels: Sequence[str]) -> tuple[np.ndarray, list[str]]:
    """Map labels to dense int32 codes in order of first occurrence."""
    codes = np.empty(len(labels), dtype=np.int32)
    vocab: dict[str, int] = {}
    for i, label in enumerate(labels):
        code = vocab.get(label)
        if code is None:
            code = vocab[label] = len(vocab)
        codes[i] = code
    return codes, list(vocab)
