"""Tests for brute-force ground truth and vertex probing."""

import pytest

from bayesarith.core.errors import RangeError, TooLarge
from bayesarith.core.models import RoleKind, VariableRole
from bayesarith.encoder.addition import AdditionSpec, build_addition
from bayesarith.oracle.brute_force import (
    addition_assignment,
    enumerate_addition,
    enumerate_multiplication,
    lift,
    multiplication_assignment,
    trial_division,
)
from bayesarith.oracle.vertices import integral_points, sample_vertices


def _operand(assignment, kind, width):
    return sum(assignment.role_value(VariableRole(kind, i)) << i for i in range(width))


class TestAssignments:
    def test_addition_bits(self):
        assignment = addition_assignment(2, 2, 3)
        # S = 5 = 101, R_1 = 0, R_2 = S_2 = 1
        assert assignment.bits == (0, 1, 1, 1, 1, 0, 0, 1)

    def test_multiplication_operands(self):
        assignment = multiplication_assignment(3, 2, 5, 3)
        assert _operand(assignment, RoleKind.A, 3) == 5
        assert _operand(assignment, RoleKind.B, 2) == 3

    def test_multiplication_running_sum(self):
        # 5 * 3 = 15: the step-1 sum bits S_{1,1}, S_{1,2}, S_{1,3} and carry R_{1,4}
        assignment = multiplication_assignment(3, 2, 5, 3)
        sums = [assignment.role_value(VariableRole(RoleKind.S, i, 1)) for i in range(1, 4)]
        assert sums == [1, 1, 1]
        assert assignment.role_value(VariableRole(RoleKind.R, 4, 1)) == 0

    def test_lift_needs_a_covering_environment(self, add_2_plus_3):
        with pytest.raises(RangeError):
            lift(addition_assignment(1, 0, 1), add_2_plus_3)


class TestEnumeration:
    def test_addition_without_data(self):
        assert len(enumerate_addition(2)) == 16

    def test_addition_with_operands(self):
        (only,) = enumerate_addition(2, u=2, v=3)
        assert only == addition_assignment(2, 2, 3)

    def test_addition_with_sum(self):
        found = enumerate_addition(1, s=1)
        assert len(found) == 2

    def test_subtraction_has_no_assignment(self):
        assert enumerate_addition(1, u=1, s=0) == []

    def test_limits(self):
        with pytest.raises(TooLarge):
            enumerate_addition(7)
        assert len(enumerate_addition(3, u=1, v=1, limit=3)) == 1
        with pytest.raises(TooLarge):
            enumerate_multiplication(9, 8)

    def test_multiplication(self):
        assert len(enumerate_multiplication(2, 2)) == 16
        assert len(enumerate_multiplication(2, 2, c=6)) == 2
        assert enumerate_multiplication(2, 2, c=5) == []


class TestTrialDivision:
    def test_composite(self):
        assert str(trial_division(91)) == "Composite(7)"

    def test_prime(self):
        result = trial_division(97)
        assert result.is_prime
        assert str(result) == "Prime"

    def test_too_small(self):
        with pytest.raises(RangeError):
            trial_division(1)


class TestVertices:
    def test_factoring_six_has_two_integral_points(self, factoring_6):
        points = integral_points(factoring_6)
        products = sorted(
            (_operand(p, RoleKind.A, 2), _operand(p, RoleKind.B, 2)) for p in points
        )
        assert products == [(2, 3), (3, 2)]

    def test_addition_has_one_integral_point(self, add_2_plus_3):
        (point,) = integral_points(add_2_plus_3)
        assert point == addition_assignment(2, 2, 3)

    def test_enumeration_bound(self, factoring_6):
        with pytest.raises(TooLarge):
            integral_points(factoring_6, max_variables=8)

    def test_sampling_is_reproducible(self, factoring_6):
        first = sample_vertices(factoring_6, samples=8, seed=3)
        second = sample_vertices(factoring_6, samples=8, seed=3)
        assert first.vertices == second.vertices
        assert first.method == "sampling"
        assert 1 <= len(first.vertices) <= 8
        assert all(factoring_6.is_satisfied(v) for v in first.vertices)

    def test_sampling_an_infeasible_system(self):
        lp = build_addition(AdditionSpec.from_values(1, u=1, s=0))
        sample = sample_vertices(lp, samples=4)
        assert sample.vertices == []
        assert sample.integral == []
