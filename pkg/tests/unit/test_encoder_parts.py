"""Tests for gate lists, universal equations and the unknown table."""

import pytest
from hypothesis import given
from hypothesis import settings as hyp_settings
from hypothesis import strategies as st

from bayesarith.core.errors import PolarityError
from bayesarith.core.models import ConstraintKind, Requirement
from bayesarith.encoder.gates import (
    GateKind,
    addition_gates,
    gate_positives,
    gate_rows,
    product_gates,
    shifted_gates,
    signed_pattern,
)
from bayesarith.encoder.multiplication import multiplication_gates
from bayesarith.encoder.table import UnknownTable
from bayesarith.encoder.universal import universal_count, universal_equations, universal_rows


class TestGates:
    def test_one_bit_adder_is_a_half_adder(self):
        (gate,) = addition_gates(1)
        assert gate.kind is GateKind.HALF
        assert gate.inputs == (1, 2)
        assert gate.outputs == (3, 4)

    def test_half_adder_rows(self):
        (gate,) = addition_gates(1)
        rows = dict(gate_rows(gate))
        assert rows[3] == ((((3,), 1), ((-1, 2), -1), ((1, -2), -1)), 0)
        assert rows[4] == ((((4,), 1), ((1, 2), -1)), 0)

    def test_full_adder_inputs(self):
        gates = addition_gates(3)
        assert [g.kind for g in gates] == [GateKind.HALF, GateKind.FULL, GateKind.FULL]
        # U_1, V_1 and R_1 of a 3-bit adder
        assert gates[1].inputs == (2, 5, 10)

    def test_full_adder_rows_have_five_terms(self):
        gate = addition_gates(2)[1]
        assert all(len(terms) == 5 for _, (terms, _) in gate_rows(gate))

    def test_signed_pattern_is_canonical(self):
        assert signed_pattern((10, 2, 5), (1, 0, 1)) == (-2, 5, 10)

    def test_gate_positives(self):
        half, full = addition_gates(2)
        assert gate_positives(half) == [(1, 3)]
        assert gate_positives(full) == [(2, 4, 7), (2, 4), (2, 7), (4, 7)]

    def test_shifted_and_product_gate_counts(self):
        n, m = 3, 4
        assert len(product_gates(n, m)) == n * m
        assert all(g.kind is GateKind.AND for g in product_gates(n, m))
        structural = sum(len(gate_rows(g)) for g in shifted_gates(n, m))
        assert structural == 2 * n * (m - 1)
        assert len(multiplication_gates(n, m)) == len(shifted_gates(n, m)) + n * m

    def test_two_by_two_multiplier_has_no_full_adders(self):
        assert all(g.kind is not GateKind.FULL for g in multiplication_gates(2, 2))


class TestUniversal:
    def test_singleton_normalization(self):
        assert list(universal_rows((4,))) == [((((4,), 1), ((-4,), 1)), 1)]

    def test_pair_marginals(self):
        rows = list(universal_rows((1, 2)))
        assert len(rows) == 4
        assert ((((2,), 1), ((1, 2), -1), ((-1, 2), -1)), 0) in rows

    @pytest.mark.parametrize("arity,count", [(1, 1), (2, 4), (3, 12)])
    def test_counts(self, arity, count):
        positive = tuple(range(1, arity + 1))
        assert len(list(universal_rows(positive))) == count
        assert universal_count(arity) == count

    def test_equations_are_tagged_universal(self):
        equations = universal_equations([Requirement((1, 2))])
        assert {e.kind for e in equations} == {ConstraintKind.UNIVERSAL}
        assert all(e.label == "universal (1;2)" for e in equations)

    def test_negative_generator_rejected(self):
        with pytest.raises(PolarityError):
            universal_equations([Requirement((-1,))])


class TestUnknownTable:
    @pytest.fixture
    def pair_table(self):
        return UnknownTable(4, [(1, 2)])

    def test_size(self, pair_table):
        assert len(pair_table) == 12
        assert pair_table.positive_count == 5

    def test_columns(self, pair_table):
        assert pair_table.column((1,)) == 0
        assert pair_table.column((-1,)) == 1
        assert pair_table.column((1, 2)) == 8
        assert pair_table.column((1, -2)) == 9
        assert pair_table.column((-1, -2)) == 11

    def test_unknown_literal(self, pair_table):
        with pytest.raises(KeyError):
            pair_table.column((1, 3))
        with pytest.raises(KeyError):
            pair_table.column((5,))

    def test_triples_close_over_their_pairs(self):
        table = UnknownTable(3, [(1, 2, 3)])
        assert len(table) == 6 + 12 + 8
        assert table.positives() == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]

    @given(st.lists(st.tuples(st.integers(1, 6), st.integers(7, 12)), max_size=6))
    @hyp_settings(max_examples=50)
    def test_literals_inverts_column(self, pairs):
        table = UnknownTable(12, pairs)
        for column in range(len(table)):
            assert table.column(table.literals(column)) == column
