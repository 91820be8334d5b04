"""Coordinate-wise comparison of computed structures with the printed tables."""

import logging
from collections import defaultdict
from collections.abc import Callable, Hashable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from bialgebra.coproduct import Coproduct
from catalog.notation import parse_bracket_table, parse_coproduct_table
from catalog.tables import TABLES
from lie3.models import AlgebraSpec, permutation_sign
from lie3.scalars import ZERO, format_scalar, format_vector
from lie3.tensor import format_wedge, wedge_coefficients

logger = logging.getLogger(__name__)

Coords = dict[Hashable, Fraction]


class Classification(Enum):
    """How a printed coordinate relates to the computed one."""

    MATCH = "match"
    SIGN = "sign"  # computed = -printed
    TYPO = "typo"  # the printed relation is ill-formed or listed twice
    STRUCTURAL = "structural"


@dataclass(frozen=True)
class DiscrepancyRecord:
    """One disagreeing coordinate of a printed table."""

    case_id: str
    object: str  # "mu" or "delta"
    key: str  # bracket arguments or coproduct argument, e.g. "x2 x3 x1*" / "x2"
    coordinate: str  # basis label or wedge "a^b^c"; "" flags the whole relation
    computed: Fraction | str
    printed: Fraction | str
    classification: Classification
    line_number: int | None = None  # first printed line for the key

    def as_record(self) -> dict[str, str]:
        def text(v: Fraction | str) -> str:
            return format_scalar(v) if isinstance(v, Fraction) else v

        return {
            "case": self.case_id,
            "object": self.object,
            "key": self.key,
            "coordinate": self.coordinate or "*",
            "computed": text(self.computed),
            "printed": text(self.printed),
            "class": self.classification.value,
            "line": "" if self.line_number is None else str(self.line_number),
        }


@dataclass
class DiscrepancyLedger:
    """All disagreements for one case, mu before delta, then by key and coordinate."""

    case_id: str
    records: list[DiscrepancyRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    compared: bool = True  # False when there was nothing to compare against

    def is_empty(self) -> bool:
        return not self.records

    def for_object(self, obj: str) -> list[DiscrepancyRecord]:
        return [r for r in self.records if r.object == obj]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.records:
            out[r.classification.value] = out.get(r.classification.value, 0) + 1
        return out


def classify(computed: Fraction, printed: Fraction, anomalous: bool = False) -> Classification:
    if computed == printed:
        return Classification.MATCH
    if anomalous:
        return Classification.TYPO
    if computed == -printed:
        return Classification.SIGN
    return Classification.STRUCTURAL


@dataclass
class _Printed:
    """Printed coordinates of one key, summed over repeated lines."""

    coords: Coords = field(default_factory=dict)
    anomalous: bool = False
    line_number: int | None = None
    lines: list[str] = field(default_factory=list)

    def add(self, coords: Coords, anomalous: bool, line_number: int, text: str) -> None:
        if self.lines:
            anomalous = True
        else:
            self.line_number = line_number
        self.anomalous = self.anomalous or anomalous
        self.lines.append(text)
        for coord, c in coords.items():
            self.coords[coord] = self.coords.get(coord, ZERO) + c
        self.coords = {k: v for k, v in self.coords.items() if v}


def _diff(
    case_id: str,
    obj: str,
    computed: Mapping[Hashable, Coords],
    printed: Mapping[Hashable, _Printed],
    key_label: Callable[[Hashable], str],
    coord_label: Callable[[Hashable], str],
    computed_text: Callable[[Hashable], str],
) -> list[DiscrepancyRecord]:
    records: list[DiscrepancyRecord] = []
    for key in sorted(set(computed) | set(printed)):
        comp = computed.get(key, {})
        entry = printed.get(key, _Printed())
        before = len(records)
        for coord in sorted(set(comp) | set(entry.coords)):
            c, p = comp.get(coord, ZERO), entry.coords.get(coord, ZERO)
            cls = classify(c, p, entry.anomalous)
            if cls is not Classification.MATCH:
                records.append(
                    DiscrepancyRecord(case_id, obj, key_label(key), coord_label(coord), c, p, cls, entry.line_number)
                )
        if entry.anomalous and len(records) == before:
            records.append(
                DiscrepancyRecord(
                    case_id,
                    obj,
                    key_label(key),
                    "",
                    computed_text(key),
                    "; ".join(entry.lines),
                    Classification.TYPO,
                    entry.line_number,
                )
            )
    return records


def compare_mu(
    case_id: str, B: AlgebraSpec, text: str, n: int, params: Mapping[str, Fraction]
) -> list[DiscrepancyRecord]:
    """Printed semidirect brackets against B, keyed by increasing index triples."""
    printed: dict[Hashable, _Printed] = defaultdict(_Printed)
    for rel in parse_bracket_table(text, n, params):
        if len(set(rel.key)) != 3:
            printed[rel.key].add({}, True, rel.line_number, rel.text)
            continue
        sign = permutation_sign(rel.key)
        coords = {l: sign * c for l, c in enumerate(rel.value) if c}
        printed[tuple(sorted(rel.key))].add(coords, False, rel.line_number, rel.text)
    computed = {key: {l: c for l, c in enumerate(vec) if c} for key, vec in B.brackets.items()}

    def computed_text(key) -> str:
        vec = B.brackets.get(key)
        return format_vector(vec, B.labels) if vec else "0"

    return _diff(
        case_id,
        "mu",
        computed,
        printed,
        lambda key: " ".join(B.labels[i] for i in key),
        lambda l: B.labels[l],
        computed_text,
    )


def compare_delta(
    case_id: str, delta: Coproduct, text: str, n: int, params: Mapping[str, Fraction]
) -> list[DiscrepancyRecord]:
    """Printed coproduct images against delta in wedge coordinates a<b<c."""
    printed: dict[Hashable, _Printed] = defaultdict(_Printed)
    for rel in parse_coproduct_table(text, n, params):
        (k,) = rel.key
        printed[k].add(wedge_coefficients(rel.value), rel.malformed, rel.line_number, rel.text)
    computed = {k: wedge_coefficients(t) for k, t in delta.images.items()}
    labels = delta.labels
    return _diff(
        case_id,
        "delta",
        computed,
        printed,
        lambda k: labels[k],
        lambda idx: "^".join(labels[i] for i in idx),
        lambda k: format_wedge(delta.image(k), labels, "^"),
    )


def build_ledger(
    case_id: str,
    n: int,
    B: AlgebraSpec | None,
    delta: Coproduct | None,
    mu_table: str | None,
    delta_table: str | None,
    params: Mapping[str, Fraction],
) -> DiscrepancyLedger:
    """Ledger of every printed coordinate that differs from the computed one."""
    ledger = DiscrepancyLedger(case_id)
    if mu_table is None and delta_table is None:
        ledger.compared = False
        ledger.notes.append("no printed table")
        return ledger
    if B is None or delta is None:
        ledger.compared = False
        ledger.notes.append("no diagonal witness")
        return ledger
    if mu_table is not None:
        ledger.records.extend(compare_mu(case_id, B, TABLES[mu_table], n, params))
    if delta_table is not None:
        ledger.records.extend(compare_delta(case_id, delta, TABLES[delta_table], n, params))
    logger.debug("%s: %d ledger records %s", case_id, len(ledger.records), ledger.counts())
    return ledger

