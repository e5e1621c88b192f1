"""Kernel backend selection: compiled extension when available, else pure Python.

Set TRAJSUM_NO_EXT=1 in the environment to force the pure-Python kernels
(useful for benchmarking and for testing backend equivalence).
"""

import os

if os.environ.get("TRAJSUM_NO_EXT") == "1":
    from trajsum._kernels import _pyscan as _impl

    HAVE_COMPILED = False
else:
    try:
        from trajsum._kernels import _cscan as _impl  # type: ignore[no-redef]

        HAVE_COMPILED = True
    except ImportError:
        from trajsum._kernels import _pyscan as _impl  # type: ignore[no-redef]

        HAVE_COMPILED = False

BACKEND = "compiled" if HAVE_COMPILED else "pure-python"

scan_summarize = _impl.scan_summarize
match_lengths = _impl.match_lengths
