from fractions import Fraction

import pytest

import hassedeg

EXAMPLE = [7, 9, 5, 2, 3, 8, 4, 1, 6]


def test_degrees_of_small_permutations():
    assert hassedeg.degrees([3, 2, 1]) == {"down": 2, "up": 0, "total": 2}
    assert hassedeg.degrees([1, 2, 3]) == {"down": 0, "up": 2, "total": 2}
    assert hassedeg.inversion_number([2, 3, 1]) == 2
    assert hassedeg.inverse([2, 3, 1]) == [3, 1, 2]
    assert hassedeg.covered_by([2, 3, 1]) == [[1, 3, 2], [2, 1, 3]]


def test_descent_set_and_reconstruction():
    members = hassedeg.strong_descent_set(EXAMPLE)
    assert len(members) == 12
    assert members[0] == (1, 2)
    assert hassedeg.reconstruct(9, members) == EXAMPLE
    assert len(hassedeg.strong_descent_set(EXAMPLE, r=2)) == 19


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        hassedeg.degrees([1, 1])
    with pytest.raises(hassedeg.ValidationFailure):
        hassedeg.reconstruct(3, [(1, 2), (1, 3), (2, 3)])
    assert not hassedeg.is_realizable(3, [(1, 2), (1, 3), (2, 3)])


def test_extremal_families():
    assert hassedeg.max_down_degree(5) == 6
    assert hassedeg.extremal_down_permutations(4) == [[3, 4, 1, 2], [4, 2, 3, 1]]
    assert len(hassedeg.extremal_total_permutations(5)) == 16
    value, attaining = hassedeg.brute_force_max(5, "total", jobs=1)
    assert value == hassedeg.max_total_degree(5) == 9
    assert attaining == hassedeg.extremal_total_permutations(5)


def test_expectations():
    assert hassedeg.expected_down_degree(3) == Fraction(4, 3)
    assert hassedeg.expected_down_degree(9) == Fraction(2593, 252)
    assert hassedeg.triple_sum_expectation(30) == hassedeg.expected_down_degree(30)
    assert hassedeg.distribution(3) == {0: 1, 1: 2, 2: 3}
    est = hassedeg.monte_carlo_mean(20, "down", samples=20000, seed=3, jobs=1)
    assert est == hassedeg.monte_carlo_mean(20, "down", samples=20000, seed=3, jobs=2)
    exact = float(hassedeg.expected_down_degree(20))
    assert abs(est["mean"] - exact) <= 4 * est["standard_error"]


def test_verify_small():
    passed, report = hassedeg.verify(max_n=4, sampled_n=[12], samples=50, jobs=1)
    assert passed
    assert report.strip().endswith("24/24 checks passed")
