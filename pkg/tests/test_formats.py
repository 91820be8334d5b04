"""Tests for the algebra and derivation file formats and report rendering."""

from fractions import Fraction

import pytest

from bialgebra import Coproduct, coproduct_from_r, r_from_D
from catalog import Classification, DiscrepancyLedger, DiscrepancyRecord, catalog_algebra
from formats import (
    emit_algebra,
    emit_coproduct,
    emit_derivation,
    format_record,
    ledger_records,
    parse_algebra,
    parse_derivation,
    render_ledger,
    render_report,
    report_records,
)
from lie3 import CheckReport, LinearMap, ParseError

from tests.conftest import B1_FILE


class TestAlgebraFile:
    """Tests for AlgebraFile text."""

    def test_parse_b1(self, b1):
        """The b1 file reads back as the catalog algebra."""
        alg = parse_algebra(B1_FILE)
        assert alg == b1
        assert alg.name == "b1"

    def test_several_terms_and_fractions(self):
        """`2:1 1:-1/2` adds terms with exact coefficients."""
        alg = parse_algebra("dim 4\nbracket 1 3 4 -> 2:1 1:-1/2\n")
        assert alg.brackets[(0, 2, 3)][:2] == (Fraction(-1, 2), 1)

    def test_zero_bracket(self):
        """A lone `0` term stores nothing."""
        assert parse_algebra("dim 3\nbracket 1 2 3 -> 0\n").is_abelian()

    def test_custom_basis(self):
        """`basis` renames the labels."""
        alg = parse_algebra("dim 3\nbasis a b c\nbracket 1 2 3 -> 1:1\n")
        assert alg.describe() == ["[a,b,c] = a"]

    def test_emit_then_parse(self):
        """Canonical text of a parametrised case reads back to the same structure."""
        alg = catalog_algebra("5-d5", {"beta": "1/3"})
        assert parse_algebra(emit_algebra(alg)) == alg

    def test_unordered_triple_hint(self):
        """An odd reordering asks for negated coefficients."""
        with pytest.raises(ParseError, match="negate") as info:
            parse_algebra("dim 4\nbracket 3 2 4 -> 1:1\n")
        assert info.value.line_number == 2
        assert "bracket 2 3 4" in str(info.value)

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ("dim 4\nbracket 1 1 2 -> 3:1\n", "repeated index"),
            ("dim 4\nbracket 1 2 5 -> 3:1\n", "out of range"),
            ("dim 4\nbracket 1 2 3 -> 3:1\nbracket 1 2 3 -> 4:1\n", "duplicate"),
            ("dim 4\nlie 1 2 3\n", "unknown directive"),
            ("bracket 1 2 3 -> 3:1\ndim 4\n", "before `dim`"),
            ("algebra x\n", "missing `dim`"),
            ("dim 4\nbracket 1 2 3 -> 3:0.5\n", "0.5"),
        ],
    )
    def test_rejects(self, text, message):
        """Malformed files raise ParseError with a pointed message."""
        with pytest.raises(ParseError, match=message):
            parse_algebra(text)


class TestDerivationFile:
    """Tests for DerivationFile text."""

    def test_diag(self, b1_witness):
        """A diag line gives a diagonal map."""
        assert parse_derivation("dim 4\ndiag 1 1 1 -1\n") == b1_witness

    def test_rows(self):
        """Row i holds the x_i coordinates."""
        D = parse_derivation("derivation swap\ndim 2\nrow 0 1\nrow 1 0\n")
        assert D.column(0) == (0, 1)

    def test_emit(self, b1_witness):
        """Diagonal maps are written with `diag`."""
        text = emit_derivation(b1_witness, "D")
        assert text == "derivation D\ndim 4\ndiag 1 1 1 -1\n"
        assert parse_derivation(text) == b1_witness

    def test_emit_rows(self):
        """Other maps are written row by row."""
        D = LinearMap(((0, 1), (1, 0)))
        assert parse_derivation(emit_derivation(D)) == D

    @pytest.mark.parametrize(
        "text",
        [
            "dim 2\ndiag 1 1\nrow 1 0\n",
            "dim 2\nrow 1 0\n",
            "dim 2\ndiag 1\n",
            "diag 1 1\n",
            "dim 2\ndiag 1 x\n",
        ],
    )
    def test_rejects(self, text):
        """Mixed, short or unreadable files are refused."""
        with pytest.raises(ParseError):
            parse_derivation(text)


class TestReportRendering:
    """Tests for text and record output."""

    def test_nested_report(self):
        """Children are indented and failures list their violations."""
        root = CheckReport("pipeline")
        ok = root.add_child(CheckReport("filippov", checked=4))
        bad = root.add_child(CheckReport("cybe", checked=8))
        bad.add_violation("[[r,r,r]] = 0", ("x1", "x2*"), "1", "0")
        bad.notes.append("1 nonzero coordinates in total")
        assert ok.passed
        assert render_report(root) == [
            "pipeline: FAIL",
            "  filippov: pass (4 checked)",
            "  cybe: FAIL (8 checked)",
            "    [[r,r,r]] = 0 at (x1, x2*): 1 != 0",
            "    note: 1 nonzero coordinates in total",
        ]

    def test_violation_limit(self):
        """Only `limit` violations are listed."""
        report = CheckReport("filippov")
        for i in range(5):
            report.add_violation("FI", (f"x{i}",), "1", "0")
        lines = render_report(report, limit=2)
        assert lines[-1] == "  ... 3 more"
        assert len(lines) == 4

    def test_records(self):
        """Paths join node names with `/`."""
        root = CheckReport("pipeline")
        child = root.add_child(CheckReport("cybe", checked=1))
        child.add_violation("[[r,r,r]] = 0", ("x1",), "1", "0")
        records = report_records(root)
        assert records[1]["check"] == "pipeline/cybe"
        assert records[2]["record"] == "violation"

    def test_format_record_quotes(self):
        """Values with spaces are shell-quoted."""
        line = format_record({"record": "check", "identity": "[[r,r,r]] = 0"})
        assert line == "record=check identity='[[r,r,r]] = 0'"


class TestCoproductRendering:
    """Tests for Δ lines."""

    def test_b1_lines(self, b1, b1_witness, b1_double):
        """Each nonzero image prints once in wedge normal form."""
        delta = coproduct_from_r(b1_double, r_from_D(b1, b1_witness))
        lines = emit_coproduct(delta)
        assert "Δ(x1*) = -x2*∧x3*∧x4*" in lines
        assert "Δ(x2) = x1∧x3*∧x4*" in lines
        assert len(lines) == len(delta.images)

    def test_zero(self):
        """The zero coproduct prints as one line."""
        assert emit_coproduct(Coproduct(2)) == ["Δ = 0"]


class TestLedgerRendering:
    """Tests for ledger output."""

    def test_reproduced(self):
        """An empty ledger prints one line."""
        assert render_ledger(DiscrepancyLedger("4-b1")) == ["ledger 4-b1: printed tables reproduced"]

    def test_skipped(self):
        """A skipped comparison gives its reason."""
        ledger = DiscrepancyLedger("5-e1", notes=["no printed table"], compared=False)
        assert render_ledger(ledger) == ["ledger 5-e1: skipped (no printed table)"]
        assert ledger_records(ledger)[0]["status"] == "skipped"

    def test_records_listed(self):
        """Each record gets its class, place and line."""
        record = DiscrepancyRecord("4-b2", "delta", "x2", "", "0", "x1^x3*^x1", Classification.TYPO, 4)
        ledger = DiscrepancyLedger("4-b2", [record])
        assert render_ledger(ledger) == [
            "ledger 4-b2: 1 discrepancies (1 typo)",
            "  typo       delta x2: computed 0, printed x1^x3*^x1 (line 4)",
        ]
        assert ledger_records(ledger)[1]["coordinate"] == "*"
