"""Worker-pool helper: order-preserving parallel map with a sequential fallback."""

from __future__ import annotations

import multiprocessing
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int) -> list[R]:
    """Apply fn to every item, preserving input order.

    workers <= 1 runs in-process; results are identical either way.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    chunksize = max(1, len(items) // (workers * 8))
    with multiprocessing.Pool(workers) as pool:
        return pool.map(fn, items, chunksize=chunksize)
