"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from trajsum.core import SymbolicTrajectory, trajectory_from_pairs


def make_traj(symbols, spacing=2.0, user_id="u", t0=0.0) -> SymbolicTrajectory:
    """Trajectory from a symbol string/list with evenly spaced timestamps."""
    return trajectory_from_pairs(
        user_id, [(s, t0 + spacing * i) for i, s in enumerate(symbols)]
    )


def random_trajectory(rng: np.random.Generator, max_len=200, max_alphabet=8,
                      user_id="r") -> SymbolicTrajectory:
    """Random trajectory with exponential gaps; used by the property checks."""
    n = int(rng.integers(0, max_len + 1))
    alphabet = int(rng.integers(1, max_alphabet + 1))
    symbols = rng.integers(0, alphabet, n)
    gaps = rng.exponential(60.0, n)
    ts = np.cumsum(gaps)
    return trajectory_from_pairs(
        user_id, [(chr(97 + int(s)), float(t)) for s, t in zip(symbols, ts)]
    )


@pytest.fixture
def example_trajectory() -> SymbolicTrajectory:
    """The recurring 10-point worked example: a a c a c b b a b b, spacing 2."""
    return make_traj("aacacbbabb")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion."""
    lines = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            if "test_acceptance" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            status = "PASS" if outcome == "passed" else "FAIL"
            lines.append((name, status))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{status}  {name}")
