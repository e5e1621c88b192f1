# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels: segmentation scan and longest-match lengths.

Same contract and same floating-point accumulation order as the pure-Python
mirror in _pyscan.py; see that module for the semantics.
"""

import numpy as np


def scan_summarize(int[::1] codes, double[::1] ts, int n_min, double delta):
    """Single left-to-right segmentation scan over one encoded trajectory.

    Returns a list of (start, end, code, occurrences, weight) tuples.
    Requires dense codes in [0, n) and n_min >= 2.
    """
    cdef Py_ssize_t n = codes.shape[0]
    if n == 0:
        return []

    # candidate table indexed by code, invalidated in O(1) via a generation stamp
    cdef int n_codes = 0
    cdef Py_ssize_t i
    for i in range(n):
        if codes[i] >= n_codes:
            n_codes = codes[i] + 1

    counts_arr = np.zeros(n_codes, dtype=np.int64)
    weights_arr = np.zeros(n_codes, dtype=np.float64)
    first_ts_arr = np.zeros(n_codes, dtype=np.float64)
    first_idx_arr = np.zeros(n_codes, dtype=np.int64)
    stamp_arr = np.full(n_codes, -1, dtype=np.int64)
    cdef long long[::1] cnt = counts_arr
    cdef double[::1] wgt = weights_arr
    cdef double[::1] fts = first_ts_arr
    cdef long long[::1] fidx = first_idx_arr
    cdef long long[::1] stamp = stamp_arr

    # per-occurrence checkpoints of the active cluster
    occ_idx_arr = np.zeros(n, dtype=np.int64)
    occ_ts_arr = np.zeros(n, dtype=np.float64)
    occ_w_arr = np.zeros(n, dtype=np.float64)
    cdef long long[::1] occ_idx = occ_idx_arr
    cdef double[::1] occ_ts = occ_ts_arr
    cdef double[::1] occ_w = occ_w_arr

    cdef long long generation = 0
    cdef int c_code = -1
    cdef double c_start = 0.0
    cdef long long base_count = 0
    cdef Py_ssize_t n_occ = 0
    cdef long long reset_idx = -1

    cdef Py_ssize_t j, k, lo, hi, mid
    cdef int code
    cdef double t, w
    cdef long long boundary

    units = []

    for j in range(n):
        code = codes[j]
        t = ts[j]
        if code == c_code:
            w = occ_w[n_occ - 1]
            if codes[j - 1] == code:
                w += t - ts[j - 1]
            occ_idx[n_occ] = j
            occ_ts[n_occ] = t
            occ_w[n_occ] = w
            n_occ += 1
            continue
        if stamp[code] != generation:
            stamp[code] = generation
            cnt[code] = 1
            wgt[code] = 0.0
            fts[code] = t
            fidx[code] = j
        else:
            cnt[code] += 1
            if codes[j - 1] == code and j - 1 > reset_idx:
                wgt[code] += t - ts[j - 1]
        if cnt[code] >= n_min and wgt[code] >= delta:
            if c_code >= 0:
                # last checkpoint with index strictly below the new window start
                boundary = fidx[code]
                lo = 0
                hi = n_occ
                while lo < hi:
                    mid = (lo + hi) >> 1
                    if occ_idx[mid] < boundary:
                        lo = mid + 1
                    else:
                        hi = mid
                k = lo - 1
                units.append(
                    (c_start, occ_ts[k], c_code, base_count + k, occ_w[k])
                )
            c_code = code
            c_start = fts[code]
            base_count = cnt[code]
            occ_idx[0] = j
            occ_ts[0] = t
            occ_w[0] = wgt[code]
            n_occ = 1
            generation += 1
            reset_idx = j
    if c_code >= 0:
        units.append(
            (
                c_start,
                occ_ts[n_occ - 1],
                c_code,
                base_count + n_occ - 1,
                occ_w[n_occ - 1],
            )
        )
    return units


def match_lengths(int[::1] codes):
    """Longest-match length at every position, by direct scan."""
    cdef Py_ssize_t n = codes.shape[0]
    out_arr = np.zeros(n, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t i, j, k, best
    for i in range(1, n):
        best = 0
        for j in range(i):
            k = 0
            while i + k < n and codes[j + k] == codes[i + k]:
                k += 1
            if k > best:
                best = k
        out[i] = best
    return out_arr
