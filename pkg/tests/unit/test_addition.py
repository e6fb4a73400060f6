"""Tests for the addition encoder."""

import pytest

from bayesarith.core.errors import ContradictoryData, RangeError
from bayesarith.core.models import ConstraintKind, Environment, EnvironmentKind, Requirement
from bayesarith.encoder.addition import (
    AdditionSpec,
    addition_data,
    addition_positive_unknowns,
    addition_structural,
    build_addition,
)
from bayesarith.encoder.builder import bits_of, data_constraints, fix_probability
from bayesarith.encoder.counts import addition_counts
from bayesarith.oracle.brute_force import addition_assignment, lift


class TestAdditionSystem:
    def test_two_plus_three_sizes(self, add_2_plus_3):
        counts = add_2_plus_3.counts()
        assert add_2_plus_3.n_unknowns == 40
        assert add_2_plus_3.n_equations == 44
        assert (counts.data, counts.structural, counts.universal) == (4, 4, 36)
        assert counts.positive == 13

    def test_one_bit_sizes(self, add_0_plus_1):
        assert add_0_plus_1.n_unknowns == 12
        assert add_0_plus_1.counts().universal == 8
        assert add_0_plus_1.counts().positive == 5

    def test_one_bit_positive_unknowns(self):
        found = [req.literals for req in addition_positive_unknowns(1)]
        assert found == [(1,), (2,), (3,), (4,), (1, 2)]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_counts_match_formulas(self, n):
        built = build_addition(AdditionSpec.from_values(n, u=0, v=0)).counts()
        formula = addition_counts(n)
        assert built == formula

    def test_data_equations(self, add_2_plus_3):
        fixed = {c.terms[0][0] for c in add_2_plus_3.of_kind(ConstraintKind.DATA)}
        # U=2 -> U_0=0, U_1=1; V=3 -> V_0=V_1=1
        assert fixed == {
            Requirement((1,)),
            Requirement((-2,)),
            Requirement((-3,)),
            Requirement((-4,)),
        }
        assert all(c.rhs == 0 for c in add_2_plus_3.of_kind(ConstraintKind.DATA))

    def test_subtraction_data(self):
        env = Environment(EnvironmentKind.ADDITION, 2)
        equations = data_constraints(env, addition_data(2, u=2, s=5))
        assert [c.terms[0][0].literals for c in equations] == [(1,), (-2,), (-5,), (6,), (-8,)]

    def test_structural_labels_name_the_output(self):
        labels = [c.label for c in addition_structural(2)]
        assert labels == ["S_0", "S_1", "R_1", "R_2"]

    def test_extra_constraints(self):
        spec = AdditionSpec(1)
        lp = build_addition(spec, [fix_probability(Requirement((1,)), 1)])
        (extra,) = lp.of_kind(ConstraintKind.EXTRA)
        assert extra.rhs == 1
        assert lp.counts().extra == 1

    def test_contradictory_data(self):
        with pytest.raises(ContradictoryData):
            build_addition(AdditionSpec(1, ((1, 1), (-1, 1))))

    def test_value_too_wide(self):
        with pytest.raises(RangeError):
            AdditionSpec.from_values(2, u=4)
        with pytest.raises(RangeError):
            bits_of(-1, 3, "S")

    def test_zero_width(self):
        with pytest.raises(RangeError):
            AdditionSpec(0)


class TestDeterministicPoints:
    @pytest.mark.parametrize("u,v", [(u, v) for u in range(4) for v in range(4)])
    def test_true_sum_satisfies_system(self, u, v):
        lp = build_addition(AdditionSpec.from_values(2, u=u, v=v))
        assert lp.is_satisfied(lift(addition_assignment(2, u, v), lp))

    def test_wrong_operands_violate_data(self, add_2_plus_3):
        point = lift(addition_assignment(2, 1, 3), add_2_plus_3)
        broken = add_2_plus_3.violations(point)
        assert broken
        assert {c.kind for c in broken} == {ConstraintKind.DATA}

    def test_three_bit_full_adder_sum(self):
        lp = build_addition(AdditionSpec.from_values(3, u=5, v=7, s=12))
        assert lp.is_satisfied(lift(addition_assignment(3, 5, 7), lp))
