"""End-to-end reproduction of a catalog case.

witness D -> pre-Lie products -> A⋉A* -> r -> [[r,r,r]] -> Δ, with every
engine-level verification collected in one report tree.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from bialgebra.coproduct import (
    Coproduct,
    coproduct_from_r,
    coproduct_via_products,
    coproduct_via_split,
    verify_local_cocycle_bialgebra,
    verify_structure_pattern,
)
from bialgebra.cybe import r_from_D, verify_cybe
from bialgebra.double import DoubleSpace, semidirect
from catalog.fixtures import catalog_algebra, get_entry, list_cases, printed_algebra, resolve_params
from catalog.ledger import DiscrepancyLedger, build_ledger
from derivations.lab import SEARCH_MAX_DIM, diagonal_sign_patterns, verify_dd_identity, verify_involutive
from lie3.algebra import center, derived_algebra, verify_filippov
from lie3.exceptions import DomainError
from lie3.models import AlgebraSpec, CheckReport, LinearMap
from lie3.representation import adjoint_representation, verify_o_operator
from lie3.tensor import Tensor, format_tensor
from prelie.checks import piecewise_check, subadjacent_unchecked, verify_D_isomorphism, verify_prelie
from prelie.products import prelie_compatible, prelie_from_D

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilterResult:
    """dim A¹ and dim Z(A) against the admissibility condition for the 5-dim tables."""

    derived_dim: int
    center_dim: int
    passes: bool  # dim A¹ <= 3, or dim A¹ = 4 with Z(A) != 0


def hypothesis_filter(alg: AlgebraSpec) -> FilterResult:
    derived = derived_algebra(alg).rank
    centre = center(alg).rank
    return FilterResult(derived, centre, derived <= 3 or (derived == 4 and centre > 0))


@dataclass
class WitnessRun:
    """Everything built from one (algebra, involutive derivation) pair."""

    double: DoubleSpace
    B: AlgebraSpec
    r: Tensor
    coproduct: Coproduct
    report: CheckReport


def _subadjacent_report(alg: AlgebraSpec, D: LinearMap) -> CheckReport:
    report = CheckReport("subadjacent", checked=1)
    recovered = subadjacent_unchecked(prelie_compatible(alg, D))
    if recovered != alg:
        report.add_violation(
            "sub-adjacent bracket of {}_A = [,,]",
            (alg.name or "A",),
            "; ".join(recovered.describe()) or "0",
            "; ".join(alg.describe()) or "0",
        )
    return report


def _compare_routes(report: CheckReport, identity: str, delta: Coproduct, other: Coproduct) -> None:
    """Image by image, on Δ and, when both carry them, on each of Δ1, Δ2, Δ3."""
    pairs = [("", delta, other)]
    if len(delta.parts) == 3 and len(other.parts) == 3:
        pairs += [(f"Δ{p}:", mine, theirs) for p, (mine, theirs) in enumerate(zip(delta.parts, other.parts), start=1)]
    for tag, mine, theirs in pairs:
        for k in range(delta.dim):
            report.checked += 1
            if mine.image(k) != theirs.image(k):
                report.add_violation(
                    identity,
                    (f"{tag}{delta.labels[k]}",),
                    format_tensor(mine.image(k), delta.labels),
                    format_tensor(theirs.image(k), delta.labels),
                )


def _split_route_report(alg: AlgebraSpec, D: LinearMap, delta: Coproduct) -> CheckReport:
    report = CheckReport("split-route")
    try:
        split = coproduct_via_split(alg, D)
    except DomainError as e:
        report.notes.append(f"skipped: {e}")
        return report
    _compare_routes(report, "Δ from r = Δ from the block expansion", delta, split)
    return report


def _product_route_report(alg: AlgebraSpec, D: LinearMap, delta: Coproduct) -> CheckReport:
    report = CheckReport("product-route")
    _compare_routes(report, "Δ from r = Δ from {}_D and {}_A", delta, coproduct_via_products(alg, D))
    return report


def run_witness(alg: AlgebraSpec, D: LinearMap, report_limit: int = 10) -> WitnessRun:
    """Build and verify every structure that an involutive derivation determines."""
    report = CheckReport("pipeline")
    report.add_child(verify_involutive(alg, D))
    report.add_child(verify_dd_identity(alg, D))
    report.add_child(verify_o_operator(alg, adjoint_representation(alg), D))
    for label, P in (("{}_D", prelie_from_D(alg, D)), ("{}_A", prelie_compatible(alg, D))):
        child = verify_prelie(P)
        child.name = f"pre-lie {label}"
        report.add_child(child)
    report.add_child(_subadjacent_report(alg, D))
    report.add_child(verify_D_isomorphism(alg, D))
    report.add_child(piecewise_check(alg, D))
    logger.info("%s: derivation-level checks done", alg.name or "algebra")

    double = DoubleSpace(alg)
    B = semidirect(alg)
    r = r_from_D(alg, D)
    report.add_child(verify_cybe(B, r, limit=report_limit))
    delta = coproduct_from_r(B, r)
    logger.info("%s: coproduct built on %s", alg.name or "algebra", B.name)
    report.add_child(_split_route_report(alg, D, delta))
    report.add_child(_product_route_report(alg, D, delta))
    report.add_child(verify_local_cocycle_bialgebra(B, delta))
    report.add_child(verify_structure_pattern(double, delta))
    return WitnessRun(double, B, r, delta, report)


@dataclass
class CaseResult:
    """Outcome of reproduce_case."""

    case_id: str
    params: dict[str, Fraction]
    algebra: AlgebraSpec
    witness: LinearMap | None = None
    run: WitnessRun | None = None
    reports: list[CheckReport] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    ledger: DiscrepancyLedger | None = None

    @property
    def coproduct(self) -> Coproduct | None:
        return self.run.coproduct if self.run else None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)


def reproduce_case(
    case_id: str,
    params: Mapping[str, str | int | Fraction] | None = None,
    defaults: Mapping[str, str | int | Fraction] | None = None,
    max_dim: int = SEARCH_MAX_DIM,
    report_limit: int = 10,
) -> CaseResult:
    """Run the full pipeline on a catalog case with its pinned or first diagonal witness."""
    entry = get_entry(case_id)
    resolved = resolve_params(entry, params, defaults)
    alg = catalog_algebra(case_id, resolved)
    result = CaseResult(case_id, resolved, alg)
    if entry.note:
        result.notes.append(entry.note)
    if entry.printed_brackets is not None:
        logger.warning("%s: %s", case_id, entry.note)

    result.reports.append(verify_filippov(alg))
    if entry.dim == 5:
        filt = hypothesis_filter(alg)
        result.notes.append(
            f"dim A1 = {filt.derived_dim}, dim Z(A) = {filt.center_dim}, "
            f"admissible: {'yes' if filt.passes else 'no'}"
        )
    logger.info("%s: algebra built and checked", case_id)

    patterns = diagonal_sign_patterns(alg, max_dim)
    if entry.witness is not None and entry.witness in patterns:
        signs = entry.witness
    elif patterns:
        signs = patterns[0]
    else:
        logger.warning("%s: no diagonal witness", case_id)
        result.notes.append("no diagonal witness")
        return result
    result.witness = LinearMap.diagonal(signs)
    result.notes.append(f"{len(patterns)} diagonal witnesses; using diag({', '.join(str(s) for s in signs)})")
    logger.info("%s: witness %s", case_id, signs)

    result.run = run_witness(alg, result.witness, report_limit)
    result.reports.append(result.run.report)
    return result


def compare_with_paper(
    case_id: str,
    params: Mapping[str, str | int | Fraction] | None = None,
    result: CaseResult | None = None,
) -> DiscrepancyLedger:
    """Discrepancy ledger of a case against its printed tables."""
    entry = get_entry(case_id)
    if result is None:
        result = reproduce_case(case_id, params)
    run = result.run
    ledger = build_ledger(
        case_id,
        entry.dim,
        run.B if run else None,
        run.coproduct if run else None,
        entry.mu_table,
        entry.delta_table,
        result.params,
    )
    if ledger.records:
        logger.warning("%s: %d printed coordinates differ from the computed tables", case_id, len(ledger.records))
    return ledger


def run_catalog(
    params: Mapping[str, str | int | Fraction] | None = None,
    defaults: Mapping[str, str | int | Fraction] | None = None,
    verify_paper: bool = False,
    max_dim: int = SEARCH_MAX_DIM,
    report_limit: int = 10,
) -> list[CaseResult]:
    """Every catalog case in case-id order."""
    results = []
    for entry in list_cases():
        result = reproduce_case(entry.case_id, params, defaults, max_dim, report_limit)
        if verify_paper:
            result.ledger = compare_with_paper(entry.case_id, result=result)
        results.append(result)
    return results


def printed_errata() -> dict[str, CheckReport]:
    """Filippov reports of the structures as printed, for the repaired cases."""
    out = {}
    for entry in list_cases():
        alg = printed_algebra(entry.case_id)
        if alg is not None:
            out[entry.case_id] = verify_filippov(alg)
    return out
