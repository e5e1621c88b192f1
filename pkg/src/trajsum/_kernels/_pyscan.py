"""Pure-Python scan kernels; behavioral mirror of the compiled _cscan module.

Both kernels operate on encoded trajectories: dense int symbol codes plus
float64 timestamps. Floating-point accumulations are performed in the same
order as in the compiled version so the two backends produce identical
results bit for bit.
"""

from __future__ import annotations

from bisect import bisect_left


def scan_summarize(codes, ts, n_min, delta):
    """Single left-to-right segmentation scan over one encoded trajectory.

    A symbol becomes dominant at the first point where its candidate entry
    reaches `n_min` occurrences and `delta` accumulated pair-weight; that
    event closes the active cluster (truncated to its last occurrence before
    the new candidate window opened), opens a new one seeded from the entry,
    and resets every candidate. Requires n_min >= 2.

    Returns a list of (start, end, code, occurrences, weight) tuples.
    """
    n = len(codes)
    units = []
    cand = {}  # code -> [count, weight, first_ts, first_idx]
    c_code = -1  # active cluster's dominant code, -1 when none
    c_start = 0.0
    base_count = 0  # dominant occurrences at cluster-open time
    occ_idx = []  # per-occurrence checkpoints since the cluster opened
    occ_ts = []
    occ_w = []  # cumulative dominant-symbol weight at each checkpoint
    reset_idx = -1  # index of the point whose processing triggered the last reset

    for j in range(n):
        code = codes[j]
        t = ts[j]
        if code == c_code:
            # extend the active cluster; pair-weight only for an adjacent
            # occurrence of the dominant symbol
            w = occ_w[-1]
            if codes[j - 1] == code:
                w += t - ts[j - 1]
            occ_idx.append(j)
            occ_ts.append(t)
            occ_w.append(w)
            continue
        entry = cand.get(code)
        if entry is None:
            entry = cand[code] = [1, 0.0, t, j]
        else:
            entry[0] += 1
            if codes[j - 1] == code and j - 1 > reset_idx:
                entry[1] += t - ts[j - 1]
        if entry[0] >= n_min and entry[1] >= delta:
            if c_code >= 0:
                units.append(
                    _close(c_code, c_start, base_count, occ_idx, occ_ts, occ_w, entry[3])
                )
            c_code = code
            c_start = entry[2]
            base_count = entry[0]
            occ_idx = [j]
            occ_ts = [t]
            occ_w = [entry[1]]
            cand = {}
            reset_idx = j
    if c_code >= 0:
        units.append(
            _emit(c_code, c_start, base_count, occ_idx, occ_ts, occ_w, len(occ_idx) - 1)
        )
    return units


def _close(code, start, base_count, occ_idx, occ_ts, occ_w, boundary):
    # last dominant occurrence strictly before the new candidate window;
    # the open checkpoint always survives, so k >= 0
    k = bisect_left(occ_idx, boundary) - 1
    return _emit(code, start, base_count, occ_idx, occ_ts, occ_w, k)


def _emit(code, start, base_count, occ_idx, occ_ts, occ_w, k):
    # plain Python scalars, matching what the compiled kernel returns
    return (float(start), float(occ_ts[k]), int(code), int(base_count + k),
            float(occ_w[k]))


def match_lengths(codes):
    """Longest-match length at every position, by direct scan.

    out[i] is the length of the longest prefix of codes[i:] that also starts
    at some earlier position j < i (the match may run past i). out[0] = 0.
    Worst case O(n^3); fine for the short sequences this is meant for.
    """
    n = len(codes)
    out = [0] * n
    for i in range(1, n):
        best = 0
        for j in range(i):
            k = 0
            while i + k < n and codes[j + k] == codes[i + k]:
                k += 1
            if k > best:
                best = k
        out[i] = best
    return out
