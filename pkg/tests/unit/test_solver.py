"""Tests for the exact simplex, rank computations and the float backend."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hyp_settings
from hypothesis import strategies as st

from bayesarith.core.errors import EncodingAnomaly
from bayesarith.core.models import Requirement
from bayesarith.solver import lp as lp_modes
from bayesarith.solver.floating import FloatLpSolver, rank_float
from bayesarith.solver.rank import rank, unique_solution
from bayesarith.solver.simplex import (
    LpSolver,
    LpStatus,
    Pricing,
    maximize,
    solve_feasibility,
    verify_certificate,
)
from bayesarith.solver.sparse import SparseMatrixSystem


@pytest.fixture
def simplex_3():
    """x0 + x1 + x2 = 1."""
    return SparseMatrixSystem.from_rows(3, [({0: 1, 1: 1, 2: 1}, 1)])


@pytest.fixture
def negative_sum():
    """x0 + x1 = -1 has no nonnegative solution."""
    return SparseMatrixSystem.from_rows(2, [({0: 1, 1: 1}, -1)])


class TestSparseSystem:
    def test_merge_and_drop_zeros(self):
        system = SparseMatrixSystem.from_rows(3, [([(0, 1), (2, 1), (0, -1)], 0)])
        assert system.rows == (((2, Fraction(1)),),)

    def test_rejects_bad_columns(self):
        with pytest.raises(ValueError):
            SparseMatrixSystem.from_rows(2, [({3: 1}, 0)])

    def test_residuals(self, simplex_3):
        assert simplex_3.residuals([Fraction(1, 2), 0, 0]) == [Fraction(1, 2)]
        assert simplex_3.is_feasible_point([0, Fraction(1, 3), Fraction(2, 3)])
        assert not simplex_3.is_feasible_point([2, -1, 0])

    def test_to_scipy(self, simplex_3):
        matrix, rhs = simplex_3.to_scipy()
        assert matrix.shape == (1, 3)
        assert matrix.toarray().tolist() == [[1.0, 1.0, 1.0]]
        assert rhs.tolist() == [1.0]

    def test_from_lp_names(self, add_0_plus_1):
        system = SparseMatrixSystem.from_lp(add_0_plus_1)
        assert system.n_cols == 12
        assert system.n_rows == 12
        assert system.name(add_0_plus_1.column(Requirement((1, 2)))) == "(1;2)"


class TestExactSimplex:
    def test_feasible(self, simplex_3):
        outcome = solve_feasibility(simplex_3)
        assert outcome.is_feasible
        assert simplex_3.is_feasible_point(outcome.point)
        assert outcome.exact

    def test_maximize(self, simplex_3):
        outcome = maximize(simplex_3, {0: 1})
        assert outcome.objective == 1
        assert outcome.point == (1, 0, 0)

    @pytest.mark.parametrize("pricing", list(Pricing))
    def test_pricing_rules_agree(self, simplex_3, pricing):
        assert maximize(simplex_3, {1: 2, 2: 1}, pricing).objective == 2

    def test_warm_start_reuses_the_tableau(self, simplex_3):
        solver = LpSolver(simplex_3)
        first = solver.maximize({0: 1})
        second = solver.maximize({2: 1})
        assert (first.objective, second.objective) == (1, 1)
        assert second.point == (0, 0, 1)
        assert solver.pivots == second.pivots
        assert second.pivots > first.pivots

    def test_infeasible_certificate(self, negative_sum):
        outcome = solve_feasibility(negative_sum)
        assert outcome.status is LpStatus.INFEASIBLE
        assert outcome.certificate == (Fraction(-1),)
        assert verify_certificate(negative_sum, outcome.certificate)

    def test_maximize_on_infeasible_system(self, negative_sum):
        assert maximize(negative_sum, {0: 1}).status is LpStatus.INFEASIBLE

    def test_unbounded(self):
        system = SparseMatrixSystem.from_rows(2, [({0: 1, 1: -1}, 0)])
        with pytest.raises(EncodingAnomaly):
            maximize(system, {0: 1})
        outcome = LpSolver(system).maximize({0: 1}, allow_unbounded=True)
        assert outcome.status is LpStatus.UNBOUNDED

    def test_redundant_rows(self):
        system = SparseMatrixSystem.from_rows(2, [({0: 1, 1: 1}, 1), ({0: 2, 1: 2}, 2)])
        outcome = maximize(system, {1: 1})
        assert outcome.objective == 1
        assert system.is_feasible_point(outcome.point)

    def test_fractional_vertex(self):
        system = SparseMatrixSystem.from_rows(2, [({0: 2, 1: 1}, 1), ({0: 1, 1: 2}, 1)])
        outcome = solve_feasibility(system)
        assert outcome.point == (Fraction(1, 3), Fraction(1, 3))

    def test_certificate_check_rejects_wrong_vectors(self, negative_sum, simplex_3):
        assert not verify_certificate(negative_sum, (Fraction(1),))
        assert not verify_certificate(negative_sum, (1, 1))
        assert not verify_certificate(simplex_3, (-1,))

    def test_addition_system_is_feasible(self, add_2_plus_3):
        system = SparseMatrixSystem.from_lp(add_2_plus_3)
        outcome = solve_feasibility(system)
        assert outcome.is_feasible
        assert system.is_feasible_point(outcome.point)

    def test_subtraction_system_has_a_certificate(self, subtraction_1_from_0):
        system = SparseMatrixSystem.from_lp(subtraction_1_from_0)
        outcome = solve_feasibility(system)
        assert outcome.status is LpStatus.INFEASIBLE
        assert verify_certificate(system, outcome.certificate)

    @given(
        st.lists(
            st.tuples(st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.integers(-4, 4)),
            min_size=1,
            max_size=3,
        )
    )
    @hyp_settings(max_examples=60, deadline=None)
    def test_point_or_certificate(self, rows):
        system = SparseMatrixSystem.from_rows(4, [(list(enumerate(c)), b) for c, b in rows])
        outcome = solve_feasibility(system)
        if outcome.is_feasible:
            assert system.is_feasible_point(outcome.point)
        else:
            assert verify_certificate(system, outcome.certificate)


class TestRank:
    def test_one_bit_addition(self, add_0_plus_1):
        assert rank(SparseMatrixSystem.from_lp(add_0_plus_1)) == 11

    def test_two_bit_addition(self, add_2_plus_3):
        assert rank(SparseMatrixSystem.from_lp(add_2_plus_3)) == 35

    def test_factoring_six(self, factoring_6):
        system = SparseMatrixSystem.from_lp(factoring_6)
        assert rank(system) == 42
        assert rank(system, dense_threshold=0) == 42

    def test_sparse_and_dense_paths_agree(self, add_2_plus_3):
        system = SparseMatrixSystem.from_lp(add_2_plus_3)
        assert rank(system, dense_threshold=0) == rank(system)

    def test_scaled_row_leaves_rank_unchanged(self, simplex_3):
        doubled = simplex_3.with_rows([({0: 2, 1: 2, 2: 2}, 2)])
        assert rank(doubled) == rank(simplex_3) == 1

    def test_empty(self):
        assert rank(SparseMatrixSystem.from_rows(3, [])) == 0

    def test_subtraction_unique_solution(self, subtraction_1_from_0):
        system = SparseMatrixSystem.from_lp(subtraction_1_from_0)
        assert rank(system) == 12
        solution = unique_solution(system)
        assert solution is not None
        assert solution[subtraction_1_from_0.column(Requirement((2,)))] == -1
        assert solution[subtraction_1_from_0.column(Requirement((-2,)))] == 2

    def test_no_unique_solution_without_full_rank(self, add_0_plus_1):
        assert unique_solution(SparseMatrixSystem.from_lp(add_0_plus_1)) is None

    def test_no_unique_solution_when_inconsistent(self):
        system = SparseMatrixSystem.from_rows(1, [({0: 1}, 1), ({0: 1}, 2)])
        assert unique_solution(system) is None


class TestFloatMode:
    def test_rank(self, factoring_6):
        assert rank_float(SparseMatrixSystem.from_lp(factoring_6)) == 42

    def test_feasibility_agrees_with_exact(self, add_2_plus_3, subtraction_1_from_0):
        feasible = SparseMatrixSystem.from_lp(add_2_plus_3)
        infeasible = SparseMatrixSystem.from_lp(subtraction_1_from_0)
        assert FloatLpSolver(feasible).solve_feasibility().is_feasible
        outcome = FloatLpSolver(infeasible).solve_feasibility()
        assert outcome.status is LpStatus.INFEASIBLE
        assert not outcome.exact

    def test_maximize(self, simplex_3):
        outcome = FloatLpSolver(simplex_3).maximize({1: 2, 2: 1})
        assert outcome.objective == pytest.approx(2.0)

    def test_mode_dispatch(self, simplex_3, factoring_6):
        system = SparseMatrixSystem.from_lp(factoring_6)
        assert lp_modes.rank(system, "float") == lp_modes.rank(system, "exact") == 42
        assert isinstance(lp_modes.make_solver(simplex_3, "float"), FloatLpSolver)
        assert isinstance(lp_modes.make_solver(simplex_3), LpSolver)
        assert lp_modes.maximize(simplex_3, {0: 1}).objective == 1
        with pytest.raises(ValueError):
            lp_modes.solve_feasibility(simplex_3, "quad")
