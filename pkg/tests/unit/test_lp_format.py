"""Tests for regex patterns, the native text format and LP export."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings as hyp_settings
from hypothesis import strategies as st

from bayesarith.core.errors import FormatError
from bayesarith.encoder.multiplication import FactoringSpec, build_factoring
from bayesarith.encoder.stream import stream_factoring_system
from bayesarith.parser.lp_format import (
    dumps_native,
    export,
    format_row,
    loads_native,
    parse_objective,
    read_native,
)
from bayesarith.parser.patterns import (
    HEADER_PATTERN,
    NAME_PATTERN,
    PROBABILITY_PATTERN,
    REQUIREMENT_PATTERN,
    TERM_PATTERN,
)
from bayesarith.solver.sparse import SparseMatrixSystem

SMALL_NATIVE = """\
vars 3 rows 2
# x0 = (1)
# x1 = (-1)
# x2 = (1;2)
1*0 1*1 = 1
1*2 -1*0 = -1/2
"""


@pytest.fixture
def small_system():
    return loads_native(SMALL_NATIVE)


class TestPatterns:
    def test_requirement(self):
        match = REQUIREMENT_PATTERN.match("(1;-4;7)")
        assert match is not None
        assert match.group("literals") == "1;-4;7"

    def test_probability_inside_equation(self):
        found = [m.group("literals") for m in PROBABILITY_PATTERN.finditer("P(5) = P(-2;3)")]
        assert found == ["5", "-2;3"]

    def test_header(self):
        match = HEADER_PATTERN.match("vars 40 rows 44")
        assert match.group("vars") == "40"
        assert match.group("rows") == "44"
        assert HEADER_PATTERN.match("rows 44 vars 40") is None

    def test_name(self):
        match = NAME_PATTERN.match("# x12 = (-2;7)")
        assert match.group("col") == "12"
        assert match.group("name") == "(-2;7)"

    def test_term(self):
        match = TERM_PATTERN.match("-1/2*17")
        assert (match.group("num"), match.group("den"), match.group("col")) == ("-1", "2", "17")
        assert TERM_PATTERN.match("2*x3").group("col") == "3"
        assert TERM_PATTERN.match("2x3") is None


class TestNativeFormat:
    def test_parse(self, small_system):
        assert small_system.n_cols == 3
        assert small_system.rows[0] == ((0, Fraction(1)), (1, Fraction(1)))
        assert small_system.rhs == (Fraction(1), Fraction(-1, 2))
        assert small_system.name(2) == "(1;2)"

    def test_dump_then_load_keeps_rows_and_names(self, small_system):
        again = loads_native(dumps_native(small_system))
        assert again == small_system

    def test_format_row(self):
        assert format_row([(4, 1), (9, -1), (10, Fraction(1, 3))], 0) == "1*4 -1*9 1/3*10 = 0"
        assert format_row([], 2) == "= 2"

    def test_factoring_system_survives_text(self, factoring_6):
        system = SparseMatrixSystem.from_lp(factoring_6)
        assert loads_native(dumps_native(system)) == system

    def test_read_from_file(self, tmp_path, small_system):
        path = tmp_path / "small.txt"
        path.write_text(SMALL_NATIVE, encoding="utf-8")
        assert read_native(path) == small_system

    @given(
        st.lists(
            st.tuples(
                st.dictionaries(
                    st.integers(0, 5),
                    st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool),
                    min_size=1,
                    max_size=4,
                ),
                st.fractions(min_value=-5, max_value=5, max_denominator=7),
            ),
            max_size=6,
        )
    )
    @hyp_settings(max_examples=50)
    def test_text_preserves_random_systems(self, rows):
        system = SparseMatrixSystem.from_rows(6, rows)
        assert loads_native(dumps_native(system)) == system


class TestNativeErrors:
    def test_missing_header(self):
        with pytest.raises(FormatError) as exc:
            loads_native("1*0 = 1\n")
        assert exc.value.line_number == 1

    def test_empty(self):
        with pytest.raises(FormatError):
            loads_native("\n# only a comment\n")

    def test_row_count(self):
        with pytest.raises(FormatError, match="announces 3 rows"):
            loads_native("vars 2 rows 3\n1*0 = 1\n")

    def test_bad_term(self):
        with pytest.raises(FormatError) as exc:
            loads_native("vars 2 rows 1\n1*0 + 1*1 = 1\n")
        assert exc.value.line_number == 2

    def test_column_out_of_range(self):
        with pytest.raises(FormatError, match="column 5"):
            loads_native("vars 2 rows 1\n1*5 = 1\n")

    def test_two_equals_signs(self):
        with pytest.raises(FormatError):
            loads_native("vars 2 rows 1\n1*0 = 1 = 2\n")

    def test_partial_names(self):
        with pytest.raises(FormatError, match="names missing"):
            loads_native("vars 2 rows 1\n# x0 = (1)\n1*0 = 1\n")


class TestObjective:
    def test_parse(self):
        assert parse_objective("x3 + 2*x5 - 1/2*x7", 10) == {
            3: Fraction(1),
            5: Fraction(2),
            7: Fraction(-1, 2),
        }

    def test_repeated_columns_add_up(self):
        assert parse_objective("x1 + x1", 2) == {1: Fraction(2)}

    def test_errors(self):
        with pytest.raises(FormatError):
            parse_objective("", 4)
        with pytest.raises(FormatError):
            parse_objective("x12", 10)
        with pytest.raises(FormatError):
            parse_objective("x1 + y2", 10)


class TestExport:
    def test_lp_format(self, small_system):
        text = export(small_system, "lp", {0: 1, 2: Fraction(-1)}).decode("utf-8")
        assert text.splitlines()[1] == "Maximize"
        assert " obj: x0 - 1 x2" not in text
        assert " obj: 1 x0 - 1 x2" in text
        assert " r0: 1 x0 + 1 x1 = 1" in text
        assert " r1: 1 x2 - 1 x0 = -0.5" in text
        assert text.rstrip().endswith("End")

    def test_native_bytes(self, small_system):
        assert export(small_system).decode("utf-8") == dumps_native(small_system)

    def test_unknown_format(self, small_system):
        with pytest.raises(ValueError):
            export(small_system, "mps")


class TestStreaming:
    def test_stream_matches_in_memory_system(self, tmp_path, factoring_6):
        result = stream_factoring_system(6, tmp_path / "c6.txt")
        streamed = read_native(result.path)
        built = SparseMatrixSystem.from_lp(factoring_6)
        assert streamed.n_cols == built.n_cols == 48
        assert streamed.rows == built.rows
        assert streamed.rhs == built.rhs
        assert result.counts == factoring_6.counts()
        assert result.max_row_nnz == 3
        assert result.nnz == built.nnz

    def test_stream_reports_five_entry_rows(self, tmp_path):
        result = stream_factoring_system(63, tmp_path / "nested" / "c63.txt")
        assert result.path.exists()
        assert result.max_row_nnz == 5
        assert result.counts == build_factoring(FactoringSpec(63)).counts()
