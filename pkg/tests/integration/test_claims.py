"""Integration tests for the claim ledger."""

import pytest

from bayesarith.config.settings import Settings
from bayesarith.report.claims import VerifyConfig, verify_all
from bayesarith.report.schemas import Verdict


def _by_id(records):
    return {record.claim_id: record for record in records}


@pytest.fixture(scope="module")
def count_only_records():
    config = VerifyConfig(count_only=True, add_max_n=5, mul_max=5, settings=Settings(jobs=1))
    return _by_id(verify_all(config))


class TestCountOnly:
    def test_nothing_mismatches(self, count_only_records):
        mismatched = {
            claim_id
            for claim_id, record in count_only_records.items()
            if record.verdict is Verdict.MISMATCH
        }
        assert mismatched == set()

    def test_row_sparsity_is_five(self, count_only_records):
        record = count_only_records["instance.row-sparsity"]
        assert record.verdict is Verdict.MATCH
        assert record.expected == 5
        assert record.observed == 5
        assert "structural rows carry 5" in record.note

    def test_universal_rows_carry_three(self, count_only_records):
        record = count_only_records["instance.universal-row-sparsity"]
        assert record.verdict is Verdict.MATCH
        assert record.observed == 3

    def test_instance_sizes(self, count_only_records):
        assert count_only_records["instance.768"].verdict is Verdict.MATCH
        assert count_only_records["instance.1024"].verdict is Verdict.MATCH
        assert count_only_records["instance.2048"].observed == [63, 71]

    @pytest.mark.parametrize(
        "claim_id", ["shifted.counts", "shifted.n2m3", "product.indices", "universal.total-printed"]
    )
    def test_printed_typos(self, count_only_records, claim_id):
        assert count_only_records[claim_id].verdict is Verdict.TYPO_SUSPECTED

    def test_shifted_example_values(self, count_only_records):
        record = count_only_records["shifted.n2m3"]
        assert record.expected == [21, 54, 8]
        assert record.observed == [21, 50, 8]

    def test_printed_structural_equations_match(self, count_only_records):
        assert count_only_records["shifted.n2m3.equations"].verdict is Verdict.MATCH

    def test_solver_claims_not_run(self, count_only_records):
        record = count_only_records["factoring.c6.rank"]
        assert record.verdict is Verdict.NOT_RUN
        assert record.observed is None


@pytest.mark.slow
class TestFullRun:
    @pytest.fixture(scope="class")
    def records(self):
        config = VerifyConfig(
            add_max_n=4, mul_max=4, composite_hi=20, sweep_hi=12, settings=Settings(jobs=1)
        )
        return _by_id(verify_all(config))

    @pytest.mark.parametrize(
        "claim_id",
        [
            "addition.n1.rank",
            "addition.n2.rank",
            "addition.n2.effective-rank",
            "factoring.c6.rank",
            "factoring.c5.rank",
            "factoring.c5.half-point",
            "addition.2plus3",
            "addition.0plus1",
            "subtraction.infeasible",
            "subtraction.unique-solution",
            "addition.presolve-deterministic",
            "factoring.c6",
            "factoring.composites",
            "oracle.c6-vertices",
            "oracle.c6-sampled",
            "float.agreement",
            "instance.row-sparsity",
            "instance.universal-row-sparsity",
        ],
    )
    def test_worked_examples_hold(self, records, claim_id):
        assert records[claim_id].verdict is Verdict.MATCH

    def test_small_primes_never_factored(self, records):
        assert records["factoring.small-primes"].verdict is Verdict.MATCH

    def test_every_claim_has_a_verdict(self, records):
        assert all(record.verdict is not Verdict.NOT_RUN for record in records.values())
