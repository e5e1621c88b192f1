"""Entropy-rate estimation for finite symbol sequences.

The estimator is based on longest match-lengths: for each position, the
length of the longest prefix of the remaining sequence that already occurred
earlier. Unlike frequency-based diversity indices it is sensitive to the
*order* of visits, so sequences with identical type distributions can score
differently. Estimates are in bits per symbol.
"""

from __future__ import annotations

import math
from typing import Hashable, Sequence

import numpy as np

from trajsum import _kernels
from trajsum.core import LocationSymbol, SummaryTrajectory


def _encode(symbols: Sequence[Hashable]) -> np.ndarray:
    codes = np.empty(len(symbols), dtype=np.int32)
    seen: dict[Hashable, int] = {}
    for i, sym in enumerate(symbols):
        code = seen.get(sym)
        if code is None:
            code = seen[sym] = len(seen)
        codes[i] = code
    return codes


def match_lengths(symbols: Sequence[Hashable]) -> list[int]:
    """Longest-match length at each position; position 0 has no past, so 0."""
    return [int(x) for x in _kernels.match_lengths(_encode(symbols))]


def entropy_rate(symbols: Sequence[Hashable]) -> float:
    """Estimated entropy rate in bits per symbol; 0 for length <= 1."""
    n = len(symbols)
    if n <= 1:
        return 0.0
    lengths = _kernels.match_lengths(_encode(symbols))
    return n * math.log2(n) / (n + int(sum(lengths)))


def unit_location_sequence(summary: SummaryTrajectory) -> list[LocationSymbol]:
    """The ordered sequence of unit locations, the default estimation input."""
    return [u.location for u in summary.units]


def summary_entropy_rate(summary: SummaryTrajectory) -> float:
    """Entropy rate of the summary's location sequence."""
    return entropy_rate(unit_location_sequence(summary))
