"""File grammars and report rendering for the command line."""

from formats.algebra_file import emit_algebra, parse_algebra
from formats.derivation_file import emit_derivation, parse_derivation
from formats.report import (
    coproduct_records,
    emit_coproduct,
    format_record,
    ledger_records,
    render_ledger,
    render_report,
    report_records,
)

__all__ = [
    "emit_algebra",
    "parse_algebra",
    "emit_derivation",
    "parse_derivation",
    "coproduct_records",
    "emit_coproduct",
    "format_record",
    "ledger_records",
    "render_ledger",
    "render_report",
    "report_records",
]
