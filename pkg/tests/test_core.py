import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trajsum.core import (
    LocationSymbol,
    SummaryTrajectory,
    SummaryUnit,
    SymbolicTrajectory,
    TrajPoint,
    dataset_stats,
    distinct_locations,
    encode_labels,
    frequency_table,
    trajectory_from_pairs,
    unit_frequency_table,
)

from .conftest import make_traj


def test_location_symbol_requires_label():
    with pytest.raises(ValueError):
        LocationSymbol("")


def test_location_symbol_equality_and_order():
    assert LocationSymbol("a") == LocationSymbol("a")
    assert LocationSymbol("a") < LocationSymbol("b")
    assert len({LocationSymbol("a"), LocationSymbol("a")}) == 1


def test_traj_point_rejects_non_finite_timestamp():
    with pytest.raises(ValueError):
        TrajPoint(float("nan"), LocationSymbol("a"))


def test_trajectory_rejects_decreasing_timestamps():
    with pytest.raises(ValueError):
        trajectory_from_pairs("u", [("a", 5.0), ("a", 4.0)])


def test_trajectory_allows_duplicate_timestamps():
    t = trajectory_from_pairs("u", [("a", 1.0), ("b", 1.0), ("a", 1.0)])
    assert len(t) == 3


def test_trajectory_from_pairs_interns_labels():
    t = trajectory_from_pairs("u", [("a", 0), ("b", 1), ("a", 2)])
    assert t.points[0].location is t.points[2].location


def test_frequency_table_counts_and_ranking():
    t = trajectory_from_pairs("u", [("a", 0), ("b", 2), ("a", 4)])
    ft = frequency_table(t)
    assert ft.counts == {LocationSymbol("a"): 2, LocationSymbol("b"): 1}
    assert ft.ranking == (LocationSymbol("a"), LocationSymbol("b"))
    assert ft.rank_of(LocationSymbol("b")) == 2


def test_frequency_table_empty():
    ft = frequency_table(SymbolicTrajectory("u", ()))
    assert ft.counts == {}
    assert ft.ranking == ()


def test_frequency_tie_broken_by_first_occurrence():
    ft = frequency_table(trajectory_from_pairs("u", [("a", 0), ("b", 2)]))
    assert ft.ranking == (LocationSymbol("a"), LocationSymbol("b"))
    # reversed arrival order flips the tie
    ft = frequency_table(trajectory_from_pairs("u", [("b", 0), ("a", 2)]))
    assert ft.ranking == (LocationSymbol("b"), LocationSymbol("a"))


def test_frequency_tie_broken_by_label_on_equal_timestamps():
    ft = frequency_table(trajectory_from_pairs("u", [("b", 0), ("a", 0)]))
    assert ft.ranking == (LocationSymbol("a"), LocationSymbol("b"))


@given(st.lists(st.tuples(st.sampled_from("abcdef"), st.integers(0, 50)), max_size=60))
def test_frequency_table_is_exhaustive_permutation(pairs):
    pairs = [(s, float(t)) for s, t in sorted(pairs, key=lambda p: p[1])]
    t = trajectory_from_pairs("u", pairs)
    ft = frequency_table(t)
    assert sum(ft.counts.values()) == len(t)
    assert set(ft.ranking) == distinct_locations(t)
    assert len(ft.ranking) == len(set(ft.ranking))
    counts = ft.ranked_counts()
    assert np.all(np.diff(counts) <= 0)


def test_top_raises_out_of_range():
    ft = frequency_table(make_traj("aab"))
    with pytest.raises(ValueError):
        ft.top(3)
    assert ft.top(0) == ()


def test_distinct_locations_example(example_trajectory):
    assert distinct_locations(example_trajectory) == {
        LocationSymbol("a"), LocationSymbol("b"), LocationSymbol("c")
    }
    assert distinct_locations(SymbolicTrajectory("u", ())) == frozenset()
    assert distinct_locations(make_traj("a")) == {LocationSymbol("a")}


def test_dataset_stats_basic():
    d = [make_traj("ab"), make_traj("abcd")]
    stats = dataset_stats(d)
    assert stats.n_traj == 2
    assert stats.n_records == 6
    assert stats.avg_len == 3.0
    assert stats.std_len == 1.0  # population std


def test_dataset_stats_empty():
    stats = dataset_stats([])
    assert (stats.n_traj, stats.n_records, stats.n_locations) == (0, 0, 0)
    assert stats.avg_len == 0.0 and stats.std_len == 0.0


def test_dataset_stats_location_union():
    d = [trajectory_from_pairs("u1", [("a", 0), ("b", 1)]),
         trajectory_from_pairs("u2", [("b", 0)])]
    assert dataset_stats(d).n_locations == 2


def test_summary_unit_invariants():
    a = LocationSymbol("a")
    with pytest.raises(ValueError):
        SummaryUnit(5.0, 4.0, a, 2, 0.0)
    with pytest.raises(ValueError):
        SummaryUnit(0.0, 4.0, a, 0, 0.0)
    with pytest.raises(ValueError):
        SummaryUnit(0.0, 4.0, a, 2, 5.0)  # weight above span
    u = SummaryUnit(0.0, 4.0, a, 2, 4.0)
    assert u.span == 4.0
    assert u.goodness == 1.0
    assert SummaryUnit(3.0, 3.0, a, 2, 0.0).goodness == 1.0


def test_summary_trajectory_rejects_overlap():
    a, b = LocationSymbol("a"), LocationSymbol("b")
    u1 = SummaryUnit(0.0, 5.0, a, 2, 1.0)
    u2 = SummaryUnit(4.0, 8.0, b, 2, 1.0)
    with pytest.raises(ValueError):
        SummaryTrajectory("u", (u1, u2))


def test_unit_frequency_table_counts_units():
    a, b = LocationSymbol("a"), LocationSymbol("b")
    s = SummaryTrajectory("u", (
        SummaryUnit(0, 1, a, 2, 0.5),
        SummaryUnit(2, 3, b, 2, 0.5),
        SummaryUnit(4, 5, a, 2, 0.5),
    ))
    ft = unit_frequency_table(s)
    assert ft.counts == {a: 2, b: 1}
    assert ft.ranking == (a, b)


def test_encode_labels_dense_first_occurrence_order():
    codes, vocab = encode_labels(["x", "y", "x", "z"])
    assert vocab == ["x", "y", "z"]
    assert codes.tolist() == [0, 1, 0, 2]
    assert codes.dtype == np.int32
