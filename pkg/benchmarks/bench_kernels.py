#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Runs the segmentation scan and the longest-match kernel on synthetic
workloads with both backends and prints throughput plus speedup.

    python3 benchmarks/bench_kernels.py [--points 2000000] [--seq-len 2000]
"""

import argparse
import time

import numpy as np

from trajsum._kernels import _pyscan

try:
    from trajsum._kernels import _cscan
except ImportError:
    _cscan = None


def best_of(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def scan_workload(n_points: int):
    rng = np.random.default_rng(1)
    codes = rng.integers(0, 16, n_points).astype(np.int32)
    ts = np.cumsum(rng.exponential(120.0, n_points))
    return codes, ts


def report(name: str, unit_count: float, py_time: float, c_time: float | None):
    py_rate = unit_count / py_time
    print(f"{name}")
    print(f"  pure-python: {py_time * 1e3:9.2f} ms  ({py_rate / 1e6:7.2f} M/s)")
    if c_time is not None:
        c_rate = unit_count / c_time
        print(f"  compiled:    {c_time * 1e3:9.2f} ms  ({c_rate / 1e6:7.2f} M/s)")
        print(f"  speedup:     {py_time / c_time:9.1f}x")
    else:
        print("  compiled:    not built")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=2_000_000,
                        help="points for the segmentation scan")
    parser.add_argument("--seq-len", type=int, default=2_000,
                        help="sequence length for the match-length kernel")
    args = parser.parse_args()

    codes, ts = scan_workload(args.points)
    py = best_of(lambda: _pyscan.scan_summarize(codes, ts, 2, 960.0))
    c = None
    if _cscan is not None:
        c = best_of(lambda: _cscan.scan_summarize(codes, ts, 2, 960.0))
        assert _cscan.scan_summarize(codes, ts, 2, 960.0) == \
            _pyscan.scan_summarize(codes, ts, 2, 960.0)
    report(f"segmentation scan, {args.points:,} points", args.points, py, c)

    rng = np.random.default_rng(2)
    seq = rng.integers(0, 8, args.seq_len).astype(np.int32)
    py = best_of(lambda: _pyscan.match_lengths(seq))
    c = None
    if _cscan is not None:
        c = best_of(lambda: _cscan.match_lengths(seq))
        assert list(_cscan.match_lengths(seq)) == _pyscan.match_lengths(seq)
    report(f"match lengths, sequence of {args.seq_len:,}", args.seq_len, py, c)


if __name__ == "__main__":
    main()
