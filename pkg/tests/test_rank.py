import numpy as np
import pytest

from trajsum.core import (
    LocationSymbol,
    SummaryTrajectory,
    SummaryUnit,
    SymbolicTrajectory,
)
from trajsum.rank import rank_distribution, rank_distribution_dataset

from .conftest import make_traj, random_trajectory


def test_rank_distribution_simple():
    t = make_traj("aaab")
    assert rank_distribution(t).tolist() == [0.75, 0.25]
    assert rank_distribution(make_traj("a")).tolist() == [1.0]
    assert rank_distribution(make_traj("abcd")).tolist() == [0.25] * 4


def test_rank_distribution_summary_counts_units():
    units = tuple(
        SummaryUnit(10.0 * i, 10.0 * i + 5.0, LocationSymbol(lab), 2, 1.0)
        for i, lab in enumerate("aab")
    )
    s = SummaryTrajectory("u", units)
    assert rank_distribution(s).tolist() == pytest.approx([2 / 3, 1 / 3])


def test_rank_distribution_empty_raises():
    with pytest.raises(ValueError):
        rank_distribution(SymbolicTrajectory("u", ()))
    with pytest.raises(TypeError):
        rank_distribution([1, 2, 3])


def test_rank_distribution_non_increasing():
    rng = np.random.default_rng(14)
    for _ in range(100):
        t = random_trajectory(rng)
        if len(t) == 0:
            continue
        p = rank_distribution(t)
        assert np.all(np.diff(p) <= 1e-12)
        assert p.sum() == pytest.approx(1.0, abs=1e-9)


def test_dataset_distribution_mean_and_padding():
    t1 = make_traj("aaaa", user_id="u1")  # P(1) = 1.0, one rank
    t2 = make_traj("abab", user_id="u2")  # P = [0.5, 0.5]
    p = rank_distribution_dataset([t1, t2])
    assert p.tolist() == pytest.approx([0.75, 0.25])
    assert len(p) == 2  # padded to the larger support


def test_dataset_distribution_mass_conservation():
    rng = np.random.default_rng(16)
    ds = [random_trajectory(rng, user_id=f"u{i}") for i in range(40)]
    ds = [t for t in ds if len(t)]
    p = rank_distribution_dataset(ds)
    assert p.sum() == pytest.approx(1.0, abs=1e-9)


def test_dataset_distribution_skips_empty_inputs():
    t1 = make_traj("ab", user_id="u1")
    empty = SymbolicTrajectory("u2", ())
    p = rank_distribution_dataset([t1, empty])
    assert p.tolist() == pytest.approx([0.5, 0.5])
    with pytest.raises(ValueError):
        rank_distribution_dataset([empty])
    with pytest.raises(ValueError):
        rank_distribution_dataset([])
