"""SeqScan-d: density-based segmentation of symbolic trajectories.

Segmentation extracts the sequence of *dominant* locations: a symbol is
dominant over a period when it bounds the period at both ends, occurs at
least `n_min` times in it and accumulates at least `delta` seconds of
pair-weight (gaps between consecutive identical occurrences, a proxy for
staying time). Other symbols inside a dominance period are local noise;
points between periods are transitions. Unlike plain run-length filtering,
evidence for a symbol keeps accumulating across interleaved noise, which is
what makes the method robust on telco-style data.

Batch summarization runs on the selected scan kernel (compiled or pure
Python); the streaming summarizer is an independent per-point state machine
with identical output.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import pairwise
from statistics import fmean
from typing import Sequence

import numpy as np

from trajsum import _kernels
from trajsum._parallel import parallel_map
from trajsum.core import (
    LocationSymbol,
    SummaryTrajectory,
    SummaryUnit,
    SymbolicTrajectory,
    TrajPoint,
    distinct_locations,
    encode_labels,
)


@dataclass(frozen=True, slots=True)
class SeqScanParams:
    """Clustering thresholds: minimum occurrences and minimum weight (seconds)."""

    n_min: int
    delta: float

    def __post_init__(self):
        if self.n_min < 2:
            raise ValueError("n_min must be at least 2")
        if self.delta < 0:
            raise ValueError("delta must be non-negative")


#: Default operating point: lowest occurrence threshold and a 16-minute
#: weight floor, the configuration with the best goodness/summarization
#: trade-off on telco data.
DEFAULT_PARAMS = SeqScanParams(n_min=2, delta=16 * 60.0)


@dataclass(slots=True)
class CandidateEntry:
    """Per-symbol accumulator since the last candidate reset."""

    symbol: LocationSymbol
    count: int
    weight: float
    first_ts: float
    last_ts: float
    first_index: int


class PointKind(enum.Enum):
    CLUSTER = "cluster"
    LOCAL_NOISE = "local_noise"
    TRANSITION = "transition"


@dataclass(frozen=True, slots=True)
class PointClass:
    """Classification of one original point against a summary trajectory."""

    kind: PointKind
    unit_index: int | None = None


def occurrence_weight(trajectory: SymbolicTrajectory, j: int) -> float:
    """Weight of the occurrence at position j: the gap to an identical predecessor."""
    points = trajectory.points
    if j < 0 or j >= len(points):
        raise IndexError(f"point index {j} out of range for length {len(points)}")
    if j == 0:
        return 0.0
    cur, prev = points[j], points[j - 1]
    if cur.location != prev.location:
        return 0.0
    return abs(cur.timestamp - prev.timestamp)


def symbol_weight(trajectory: SymbolicTrajectory, location: LocationSymbol) -> float:
    """Total weight of a symbol: sum of its occurrence weights over the trajectory."""
    total = 0.0
    for a, b in pairwise(trajectory.points):
        if a.location == location and b.location == location:
            total += b.timestamp - a.timestamp
    return total


def _encode(trajectory: SymbolicTrajectory) -> tuple[np.ndarray, np.ndarray, list[str]]:
    codes, vocab = encode_labels([p.location.label for p in trajectory.points])
    ts = np.fromiter(
        (p.timestamp for p in trajectory.points), dtype=np.float64, count=len(trajectory)
    )
    return codes, ts, vocab


def _decode_units(
    raw_units: list[tuple[float, float, int, int, float]], vocab: Sequence[str]
) -> tuple[SummaryUnit, ...]:
    symbols = [LocationSymbol(label) for label in vocab]
    return tuple(
        SummaryUnit(start, end, symbols[code], occ, weight)
        for start, end, code, occ, weight in raw_units
    )


def summarize(
    trajectory: SymbolicTrajectory, params: SeqScanParams = DEFAULT_PARAMS
) -> SummaryTrajectory:
    """Extract the summary trajectory of dominant locations.

    Empty and all-noise trajectories yield an empty summary.
    """
    codes, ts, vocab = _encode(trajectory)
    raw = _kernels.scan_summarize(codes, ts, params.n_min, params.delta)
    return SummaryTrajectory(trajectory.user_id, _decode_units(raw, vocab))


def _summarize_encoded(args):
    user_id, codes, ts, vocab, n_min, delta = args
    raw = _kernels.scan_summarize(codes, ts, n_min, delta)
    return user_id, raw, vocab


def summarize_dataset(
    dataset: Sequence[SymbolicTrajectory],
    params: SeqScanParams = DEFAULT_PARAMS,
    workers: int = 1,
) -> list[SummaryTrajectory]:
    """Summarize every trajectory, optionally on a worker pool.

    Output order follows input order and is identical for any worker count.
    """
    jobs = [
        (t.user_id, *_encode(t), params.n_min, params.delta) for t in dataset
    ]
    results = parallel_map(_summarize_encoded, jobs, workers)
    return [
        SummaryTrajectory(user_id, _decode_units(raw, vocab))
        for user_id, raw, vocab in results
    ]


class StreamingSummarizer:
    """Stateful point-at-a-time summarizer.

    The sequence of units emitted by push() followed by finish() equals the
    batch summarize() output on the same points. Single-owner mutable state:
    not safe for concurrent use.
    """

    def __init__(self, params: SeqScanParams = DEFAULT_PARAMS):
        self.params = params
        self._cand: dict[LocationSymbol, CandidateEntry] = {}
        self._index = 0
        self._prev: TrajPoint | None = None
        self._reset_index = -1
        self._finished = False
        # active cluster
        self._dominant: LocationSymbol | None = None
        self._start = 0.0
        self._base_count = 0
        self._occ_idx: list[int] = []
        self._occ_ts: list[float] = []
        self._occ_w: list[float] = []

    def push(self, point: TrajPoint) -> SummaryUnit | None:
        """Feed the next point; returns a unit when one is closed by this point."""
        if self._finished:
            raise RuntimeError("summarizer already finished")
        if self._prev is not None and point.timestamp < self._prev.timestamp:
            raise ValueError("points must be pushed in non-decreasing time order")
        emitted = None
        loc = point.location
        t = point.timestamp
        j = self._index
        prev = self._prev

        if self._dominant == loc:
            w = self._occ_w[-1]
            if prev is not None and prev.location == loc:
                w += t - prev.timestamp
            self._occ_idx.append(j)
            self._occ_ts.append(t)
            self._occ_w.append(w)
        else:
            entry = self._cand.get(loc)
            if entry is None:
                entry = self._cand[loc] = CandidateEntry(loc, 1, 0.0, t, t, j)
            else:
                entry.count += 1
                if prev is not None and prev.location == loc and j - 1 > self._reset_index:
                    entry.weight += t - prev.timestamp
                entry.last_ts = t
            if entry.count >= self.params.n_min and entry.weight >= self.params.delta:
                if self._dominant is not None:
                    emitted = self._close(entry.first_index)
                self._dominant = loc
                self._start = entry.first_ts
                self._base_count = entry.count
                self._occ_idx = [j]
                self._occ_ts = [t]
                self._occ_w = [entry.weight]
                self._cand = {}
                self._reset_index = j

        self._prev = point
        self._index = j + 1
        return emitted

    def finish(self) -> SummaryUnit | None:
        """Close the stream; returns the active cluster's unit, if any."""
        if self._finished:
            raise RuntimeError("summarizer already finished")
        self._finished = True
        if self._dominant is None:
            return None
        return SummaryUnit(
            self._start,
            self._occ_ts[-1],
            self._dominant,
            self._base_count + len(self._occ_idx) - 1,
            self._occ_w[-1],
        )

    def _close(self, boundary: int) -> SummaryUnit:
        k = bisect_left(self._occ_idx, boundary) - 1
        return SummaryUnit(
            self._start,
            self._occ_ts[k],
            self._dominant,
            self._base_count + k,
            self._occ_w[k],
        )


def classify_points(
    trajectory: SymbolicTrajectory, summary: SummaryTrajectory
) -> list[PointClass]:
    """Classify each original point as cluster point, local noise or transition."""
    units = summary.units
    if units:
        if not trajectory.points:
            raise ValueError("summary units lie outside the trajectory's time span")
        t_first = trajectory.points[0].timestamp
        t_last = trajectory.points[-1].timestamp
        for u in units:
            if u.start < t_first or u.end > t_last:
                raise ValueError("summary units lie outside the trajectory's time span")
    starts = [u.start for u in units]
    out = []
    for p in trajectory.points:
        i = bisect_right(starts, p.timestamp) - 1
        if i >= 0 and p.timestamp <= units[i].end:
            kind = (
                PointKind.CLUSTER
                if p.location == units[i].location
                else PointKind.LOCAL_NOISE
            )
            out.append(PointClass(kind, i))
        else:
            out.append(PointClass(PointKind.TRANSITION))
    return out


def summarization_rate(
    trajectory: SymbolicTrajectory, summary: SummaryTrajectory
) -> float:
    """Fraction of location types eliminated by summarization."""
    n_native = len(distinct_locations(trajectory))
    if n_native == 0:
        raise ValueError("summarization rate undefined for an empty trajectory")
    return 1.0 - len(summary.locations()) / n_native


def unit_goodness(trajectory: SymbolicTrajectory, unit: SummaryUnit) -> float:
    """Estimated fraction of the unit's period spent in its dominant location.

    Recomputed from the native trajectory restricted to the unit interval;
    a zero-length period is trivially all in the location.
    """
    if unit.end == unit.start:
        return 1.0
    inside = [
        p for p in trajectory.points if unit.start <= p.timestamp <= unit.end
    ]
    weight = 0.0
    for a, b in pairwise(inside):
        if a.location == unit.location and b.location == unit.location:
            weight += b.timestamp - a.timestamp
    return weight / (unit.end - unit.start)


def trajectory_goodness(
    trajectory: SymbolicTrajectory, summary: SummaryTrajectory
) -> float:
    """Mean goodness of the summary's units."""
    if not summary.units:
        raise ValueError("goodness undefined for an empty summary")
    return fmean(unit_goodness(trajectory, u) for u in summary.units)


def _check_aligned(
    dataset: Sequence[SymbolicTrajectory], summaries: Sequence[SummaryTrajectory]
) -> None:
    if len(dataset) != len(summaries):
        raise ValueError("dataset and summaries differ in length")
    for t, s in zip(dataset, summaries):
        if t.user_id != s.user_id:
            raise ValueError(
                f"misaligned datasets: trajectory {t.user_id!r} vs summary {s.user_id!r}"
            )


def dataset_goodness(
    dataset: Sequence[SymbolicTrajectory], summaries: Sequence[SummaryTrajectory]
) -> float:
    """Unweighted mean goodness over trajectories with non-empty summaries."""
    _check_aligned(dataset, summaries)
    values = [
        trajectory_goodness(t, s) for t, s in zip(dataset, summaries) if s.units
    ]
    if not values:
        raise ValueError("no non-empty summaries to average")
    return fmean(values)


def dataset_summarization_rate(
    dataset: Sequence[SymbolicTrajectory], summaries: Sequence[SummaryTrajectory]
) -> float:
    """Unweighted mean summarization rate.

    Empty summaries contribute 1 (everything eliminated); empty native
    trajectories are skipped since their rate is undefined.
    """
    _check_aligned(dataset, summaries)
    values = [
        summarization_rate(t, s)
        for t, s in zip(dataset, summaries)
        if len(t.points) > 0
    ]
    if not values:
        raise ValueError("no non-empty trajectories to average")
    return fmean(values)
