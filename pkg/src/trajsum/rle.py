"""Run-length baseline: lossy compression of symbolic trajectories.

Plain RLE turns maximal runs of identical symbols into (interval, symbol,
count) segments. The constrained variant drops every segment that is too
short in count or in temporal extent, keeping only segments that would
qualify as meaningful dwells on their own. Being run-based, it cannot pool
evidence across noise, which is exactly what the segmentation module fixes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from trajsum.core import LocationSymbol, SymbolicTrajectory
from trajsum.seqscan import SeqScanParams


@dataclass(frozen=True, slots=True)
class RleSegment:
    """One maximal run: [start, end] interval, repeating symbol, run length."""

    start: float
    end: float
    location: LocationSymbol
    count: int

    def __post_init__(self):
        if self.end < self.start:
            raise ValueError("segment end must not precede start")
        if self.count < 1:
            raise ValueError("segment count must be at least 1")
        if self.count == 1 and self.end != self.start:
            raise ValueError("a single-point segment must have a zero-length interval")

    @property
    def span(self) -> float:
        return self.end - self.start


def rle_encode(trajectory: SymbolicTrajectory) -> list[RleSegment]:
    """Encode maximal runs of identical symbols, in order."""
    segments = []
    for location, group in groupby(trajectory.points, key=lambda p: p.location):
        run = list(group)
        segments.append(
            RleSegment(run[0].timestamp, run[-1].timestamp, location, len(run))
        )
    return segments


def rle_plus(trajectory: SymbolicTrajectory, params: SeqScanParams) -> list[RleSegment]:
    """RLE with short segments removed: keep count >= n_min and span >= delta."""
    return [
        seg
        for seg in rle_encode(trajectory)
        if seg.count >= params.n_min and seg.span >= params.delta
    ]


def expand_symbols(segments: list[RleSegment]) -> list[LocationSymbol]:
    """Invert the symbol part of the encoding (timestamps are lossy)."""
    out: list[LocationSymbol] = []
    for seg in segments:
        out.extend([seg.location] * seg.count)
    return out
