"""Classified 4- and 5-dimensional 3-Lie algebras, their printed tables and the reproduction pipeline."""

from catalog.fixtures import (
    CATALOG,
    DEFAULT_PARAMS,
    CatalogEntry,
    catalog_algebra,
    get_entry,
    list_cases,
    printed_algebra,
    resolve_params,
)
from catalog.ledger import Classification, DiscrepancyLedger, DiscrepancyRecord, build_ledger
from catalog.notation import PrintedRelation, parse_bracket_table, parse_coproduct_table
from catalog.pipeline import (
    CaseResult,
    FilterResult,
    WitnessRun,
    compare_with_paper,
    hypothesis_filter,
    printed_errata,
    reproduce_case,
    run_catalog,
    run_witness,
)

__all__ = [
    "CATALOG",
    "DEFAULT_PARAMS",
    "CatalogEntry",
    "catalog_algebra",
    "get_entry",
    "list_cases",
    "printed_algebra",
    "resolve_params",
    "Classification",
    "DiscrepancyLedger",
    "DiscrepancyRecord",
    "build_ledger",
    "PrintedRelation",
    "parse_bracket_table",
    "parse_coproduct_table",
    "CaseResult",
    "FilterResult",
    "WitnessRun",
    "compare_with_paper",
    "hypothesis_filter",
    "printed_errata",
    "reproduce_case",
    "run_catalog",
    "run_witness",
]
