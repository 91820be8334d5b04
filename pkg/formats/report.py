"""Deterministic rendering of check reports, coproducts and ledgers.

Text output is for people. Records output is one `key=value` group per line
with a fixed key order; values containing spaces are shell-quoted.
"""

import shlex
from collections.abc import Iterable, Mapping

from bialgebra.coproduct import Coproduct
from catalog.ledger import DiscrepancyLedger
from lie3.models import CheckReport
from lie3.tensor import format_wedge


def _value(text: str) -> str:
    if text and not any(c.isspace() or c in "\"'" for c in text):
        return text
    return shlex.quote(text)


def format_record(fields: Mapping[str, object]) -> str:
    """`k1=v1 k2=v2 ...` in the mapping's order."""
    return " ".join(f"{key}={_value(str(value))}" for key, value in fields.items())


def render_report(report: CheckReport, limit: int = 10, depth: int = 0) -> list[str]:
    """`name: pass (N checked)` lines, failures followed by up to `limit` violations."""
    pad = "  " * depth
    status = "pass" if report.passed else "FAIL"
    head = f"{pad}{report.name}: {status}"
    lines = [f"{head} ({report.checked} checked)" if report.checked else head]
    for v in report.violations[:limit]:
        lines.append(f"{pad}  {v.identity} at ({', '.join(v.witness)}): {v.lhs} != {v.rhs}")
    if len(report.violations) > limit:
        lines.append(f"{pad}  ... {len(report.violations) - limit} more")
    lines.extend(f"{pad}  note: {note}" for note in report.notes)
    for child in report.children:
        lines.extend(render_report(child, limit, depth + 1))
    return lines


def report_records(report: CheckReport, limit: int = 10, path: str = "") -> list[dict[str, str]]:
    """One `check` record per report node, one `violation` record per listed violation."""
    name = f"{path}/{report.name}" if path else report.name
    records = [
        {
            "record": "check",
            "check": name,
            "status": "pass" if report.passed else "fail",
            "checked": str(report.checked),
            "violations": str(len(report.violations)),
        }
    ]
    for v in report.violations[:limit]:
        records.append(
            {
                "record": "violation",
                "check": name,
                "identity": v.identity,
                "witness": ",".join(v.witness),
                "lhs": v.lhs,
                "rhs": v.rhs,
            }
        )
    for note in report.notes:
        records.append({"record": "note", "check": name, "text": note})
    for child in report.children:
        records.extend(report_records(child, limit, name))
    return records


def emit_coproduct(delta: Coproduct, labels: Iterable[str] | None = None, joiner: str = "∧") -> list[str]:
    """Wedge normal form, one `Δ(x) = ...` line per nonzero image."""
    names = tuple(labels) if labels is not None else delta.labels
    if delta.is_zero():
        return ["Δ = 0"]
    return [f"Δ({names[k]}) = {format_wedge(t, names, joiner)}" for k, t in delta.images.items()]


def coproduct_records(delta: Coproduct) -> list[dict[str, str]]:
    return [
        {"record": "coproduct", "argument": delta.labels[k], "image": format_wedge(t, delta.labels, "^")}
        for k, t in delta.images.items()
    ]


def render_ledger(ledger: DiscrepancyLedger) -> list[str]:
    """A `ledger` section: a summary line, then one line per record."""
    if not ledger.compared:
        return [f"ledger {ledger.case_id}: skipped ({'; '.join(ledger.notes)})"]
    if ledger.is_empty():
        return [f"ledger {ledger.case_id}: printed tables reproduced"]
    counts = ", ".join(f"{n} {cls}" for cls, n in sorted(ledger.counts().items()))
    lines = [f"ledger {ledger.case_id}: {len(ledger.records)} discrepancies ({counts})"]
    for r in ledger.records:
        rec = r.as_record()
        where = f"{r.object} {r.key}" + (f" [{r.coordinate}]" if r.coordinate else "")
        line = f" (line {rec['line']})" if rec["line"] else ""
        lines.append(f"  {rec['class']:<10} {where}: computed {rec['computed']}, printed {rec['printed']}{line}")
    return lines


def ledger_records(ledger: DiscrepancyLedger) -> list[dict[str, str]]:
    if not ledger.compared:
        return [{"record": "ledger", "case": ledger.case_id, "status": "skipped", "reason": "; ".join(ledger.notes)}]
    head = {"record": "ledger", "case": ledger.case_id, "status": "compared", "discrepancies": str(len(ledger.records))}
    return [head] + [{"record": "discrepancy", **r.as_record()} for r in ledger.records]
