import numpy as np
import pytest

from trajsum.core import (
    LocationSymbol,
    SummaryTrajectory,
    SummaryUnit,
    distinct_locations,
    trajectory_from_pairs,
)
from trajsum.seqscan import SeqScanParams, summarize
from trajsum.taxonomy import (
    class_percentages,
    classify_locations,
    matching_degree,
    top_n_frequent,
)

from .conftest import random_trajectory


def counted_trajectory(counts: dict[str, int]):
    """Trajectory visiting each label `count` times, higher counts first."""
    pairs = []
    t = 0.0
    for label, count in counts.items():
        for _ in range(count):
            pairs.append((label, t))
            t += 1.0
    return trajectory_from_pairs("u", pairs)


def manual_summary(labels, user_id="u"):
    """Summary with one unit per label at harmless disjoint intervals."""
    units = tuple(
        SummaryUnit(10.0 * i, 10.0 * i + 5.0, LocationSymbol(label), 2, 1.0)
        for i, label in enumerate(labels)
    )
    return SummaryTrajectory(user_id, units)


FIVE = {"a": 10, "b": 8, "c": 5, "d": 2, "e": 1}


def test_top_n_frequent():
    t = counted_trajectory(FIVE)
    assert top_n_frequent(t, 3) == {LocationSymbol(s) for s in "abc"}
    assert top_n_frequent(t, 0) == frozenset()
    with pytest.raises(ValueError):
        top_n_frequent(t, 6)


def test_top_n_boundary_tie_is_deterministic():
    t = counted_trajectory({"a": 3, "b": 2, "c": 2, "d": 1})
    # b and c tie on count; b occurred first
    assert top_n_frequent(t, 2) == {LocationSymbol("a"), LocationSymbol("b")}


def test_classify_locations_example():
    t = counted_trajectory(FIVE)
    part = classify_locations(t, manual_summary(["a", "c", "d"]))
    assert part.significant == {LocationSymbol("a"), LocationSymbol("c")}
    assert part.transit == {LocationSymbol("b")}
    assert part.sporadic == {LocationSymbol("d")}
    assert part.insignificant == {LocationSymbol("e")}
    assert part.n_native_types == 5


def test_classify_locations_empty_summary():
    t = counted_trajectory(FIVE)
    part = classify_locations(t, SummaryTrajectory("u", ()))
    assert part.significant == part.transit == part.sporadic == frozenset()
    assert part.insignificant == distinct_locations(t)


def test_classify_locations_full_summary():
    t = counted_trajectory(FIVE)
    part = classify_locations(t, manual_summary(list(FIVE)))
    assert part.significant == distinct_locations(t)
    assert not part.transit and not part.sporadic and not part.insignificant


def test_partition_property_randomized():
    rng = np.random.default_rng(9)
    for _ in range(300):
        traj = random_trajectory(rng)
        if len(traj) == 0:
            continue
        params = SeqScanParams(int(rng.integers(2, 4)), float(rng.uniform(0, 200)))
        summary = summarize(traj, params)
        part = classify_locations(traj, summary)
        native = distinct_locations(traj)
        classes = [part.significant, part.transit, part.sporadic, part.insignificant]
        assert frozenset().union(*classes) == native
        for i, x in enumerate(classes):
            for y in classes[i + 1:]:
                assert not (x & y)
        assert len(part.transit) == len(part.sporadic)
        assert len(part.significant) + len(part.transit) == len(summary.locations())


def test_matching_degree_examples():
    t = counted_trajectory({"a": 10, "b": 8, "c": 5, "d": 2})
    assert matching_degree(t, manual_summary(["a", "c", "d"])) == 1
    assert matching_degree(t, manual_summary(["a", "b", "c", "d"])) == 4
    assert matching_degree(t, manual_summary(["c"])) == 0
    assert matching_degree(t, SummaryTrajectory("u", ())) == 0


def test_matching_degree_bounded_by_summary_size():
    rng = np.random.default_rng(13)
    for _ in range(200):
        traj = random_trajectory(rng)
        if len(traj) == 0:
            continue
        summary = summarize(traj, SeqScanParams(2, float(rng.uniform(0, 200))))
        k = matching_degree(traj, summary)
        assert 0 <= k <= len(summary.locations())
        if k:
            assert top_n_frequent(traj, k) <= summary.locations()


def test_class_percentages_single_equals_per_trajectory():
    t = counted_trajectory(FIVE)
    s = manual_summary(["a", "c", "d"])
    means = class_percentages([t], [s])
    per = classify_locations(t, s).percentages
    assert means.significant == per["significant"]
    assert means.insignificant == per["insignificant"]


def test_class_percentages_mean():
    t1 = counted_trajectory({"a": 2, "b": 1})
    t1 = trajectory_from_pairs("u1", [(p.location.label, p.timestamp) for p in t1.points])
    s1 = manual_summary(["a"], user_id="u1")  # IL = {} u {b}? a significant, b insignificant
    t2 = trajectory_from_pairs("u2", [("a", 0.0), ("b", 1.0)])
    s2 = SummaryTrajectory("u2", ())  # everything insignificant
    means = class_percentages([t1, t2], [s1, s2])
    assert means.insignificant == pytest.approx((0.5 + 1.0) / 2)


def test_class_percentages_requires_data():
    with pytest.raises(ValueError):
        class_percentages([], [])
