"""Degree statistics in the Hasse diagram of the strong Bruhat order on S_n."""

from fractions import Fraction

from . import _core
from ._core import (
    ValidationFailure,
    brute_force_max,
    covered_by,
    covers_of,
    degrees,
    distribution,
    extremal_down_permutations,
    extremal_total_permutations,
    inverse,
    inversion_number,
    is_realizable,
    max_down_degree,
    max_total_degree,
    monte_carlo_mean,
    reconstruct,
    strong_descent_set,
    verify,
)


def expected_down_degree(n):
    """Exact mean down degree over S_n as a Fraction."""
    return Fraction(_core.expected_down_degree(n))


def triple_sum_expectation(n):
    return Fraction(_core.triple_sum_expectation(n))


__all__ = [
    "ValidationFailure",
    "brute_force_max",
    "covered_by",
    "covers_of",
    "degrees",
    "distribution",
    "expected_down_degree",
    "extremal_down_permutations",
    "extremal_total_permutations",
    "inverse",
    "inversion_number",
    "is_realizable",
    "max_down_degree",
    "max_total_degree",
    "monte_carlo_mean",
    "reconstruct",
    "strong_descent_set",
    "triple_sum_expectation",
    "verify",
]
