"""Table A, the erratum ledger, the worked-example audit and their frames."""
import pytest

from powersum.audit import WORKED_EXAMPLES, WorkedExample, audit_errata, audit_example, audit_examples, audit_table
from powersum.elliptic import DEG8_Q, deg8_curve
from powersum.exactcore import canonicalize, verify_pair
from powersum.families import deg2_family
from powersum.frames import (
    audit_frame,
    errata_frame,
    multiples_frame,
    pairs_frame,
    residual_frame,
    table_a_frame,
)
from powersum.tables import ERRATA, TABLE_A, Erratum, table_row


@pytest.mark.exactcore
class TestTableA:
    def test_one_row_per_degree(self):
        assert [row.n for row in TABLE_A] == list(range(2, 10))

    @pytest.mark.parametrize("row", TABLE_A, ids=lambda row: f"n={row.n}")
    def test_rows_hold_at_stated_degrees(self, row):
        report = verify_pair(row.pair())
        assert report.passed, f"n={row.n} fails at {report.failing}"

    @pytest.mark.parametrize("row", TABLE_A, ids=lambda row: f"n={row.n}")
    def test_canonical_form_keeps_rows_valid(self, row):
        canonical = canonicalize(row.pair())
        assert verify_pair(canonical).passed
        assert canonicalize(canonical) == canonical

    def test_lookup(self):
        assert table_row(6).lhs[0] == 61
        with pytest.raises(KeyError):
            table_row(10)

    def test_audit_table(self):
        assert all(record.ok for record in audit_table())


@pytest.mark.exactcore
class TestErrata:
    """Every recorded resolution recomputes from scratch."""

    @pytest.mark.parametrize("erratum", ERRATA, ids=lambda erratum: erratum.key)
    def test_resolution_holds(self, erratum):
        assert erratum.holds(), f"{erratum.key}: {erratum.resolution}"

    def test_raising_check_counts_as_failure(self):
        def broken():
            raise RuntimeError("boom")

        assert not Erratum("broken", "claim", "resolution", broken).holds()

    def test_audit_errata_pairs_results(self):
        results = audit_errata(ERRATA[:2])
        assert [erratum.key for erratum, _ in results] == [e.key for e in ERRATA[:2]]
        assert all(holds for _, holds in results)


@pytest.mark.exactcore
class TestWorkedExamples:
    @pytest.mark.parametrize("example", WORKED_EXAMPLES, ids=lambda example: example.key)
    def test_example_reproduced(self, example):
        record = audit_example(example)
        assert record.ok, f"{example.key}: passed={record.passed} matches={record.matches} error={record.error}"

    def test_printed_only_example(self):
        record = audit_example(next(e for e in WORKED_EXAMPLES if e.key == "deg6 c)"))
        assert record.matches is None
        assert record.computed is None

    def test_mismatch_is_reported(self):
        wrong = WorkedExample("wrong", (1, 5, 6), (2, 3, 7), frozenset({2}), lambda: deg2_family(2))
        record = audit_example(wrong)
        assert record.passed
        assert record.matches is False
        assert not record.ok

    def test_audit_examples_counts(self):
        records = audit_examples(WORKED_EXAMPLES[:3])
        assert len(records) == 3


@pytest.mark.exactcore
class TestFrames:
    """pandas views used by the explorer."""

    def test_residual_frame(self):
        frame = residual_frame(table_row(3).pair(), [3, 4])
        assert frame["k"].tolist() == [3, 4]
        assert frame["passes"].tolist() == [True, False]
        assert frame["residual"].tolist() == ["0", "-5760"]

    def test_pairs_frame_columns(self):
        frame = pairs_frame([row.pair() for row in TABLE_A])
        assert list(frame.columns) == ["lhs", "rhs", "degrees", "valid", "source"]
        assert frame["valid"].all()

    def test_empty_pairs_frame(self):
        assert pairs_frame([]).empty

    def test_table_a_frame(self):
        frame = table_a_frame()
        assert len(frame) == len(TABLE_A)
        assert frame["passes"].all()

    def test_audit_frame_labels(self):
        records = [audit_example(e) for e in WORKED_EXAMPLES if e.key in ("deg6 a)", "deg6 c)")]
        assert audit_frame(records)["reproduced"].tolist() == ["yes", "n/a"]

    def test_errata_frame(self):
        frame = errata_frame(audit_errata(ERRATA[:1]))
        assert frame.loc[0, "key"] == ERRATA[0].key
        assert bool(frame.loc[0, "holds"])

    def test_multiples_frame(self):
        frame = multiples_frame(deg8_curve(), DEG8_Q, 2)
        assert frame["n"].tolist() == [1, 2]
        assert frame.loc[1, "x"] == "4939/25"
        assert not frame["integral"].any()
