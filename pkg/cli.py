#!/usr/bin/env python3
"""CLI for the lie3 toolkit: verify 3-Lie algebras and build local cocycle 3-Lie bialgebras."""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from bialgebra import r_from_D, semidirect, verify_cybe
from catalog import (
    compare_with_paper,
    get_entry,
    hypothesis_filter,
    list_cases,
    reproduce_case,
    run_catalog,
    run_witness,
)
from derivations import derivation_space, diagonal_sign_patterns, eigensplit, verify_involutive
from formats import (
    coproduct_records,
    emit_algebra,
    emit_coproduct,
    format_record,
    ledger_records,
    parse_algebra,
    parse_derivation,
    render_ledger,
    render_report,
    report_records,
)
from lie3 import AlgebraSpec, CheckReport, LinearMap, center, derived_algebra, verify_antisymmetry, verify_filippov
from lie3.exceptions import DomainError, Lie3Error, ParameterError, ParseError
from prelie import prelie_compatible, prelie_from_D, subadjacent, verify_D_isomorphism, verify_prelie
from settings import Settings, load_settings, save_settings, settings_toml, update_setting


class Output:
    """Collects text lines or records and prints them once all work is done."""

    def __init__(self, args):
        self.records = args.format == "records"
        self.limit = args.settings.report_limit
        self.lines: list[str] = []
        self.failed = False

    def text(self, *lines: str) -> None:
        if not self.records:
            self.lines.extend(lines)

    def record(self, **fields: str) -> None:
        if self.records:
            self.lines.append(format_record(fields))

    def report(self, report: CheckReport) -> None:
        self.failed = self.failed or not report.passed
        if self.records:
            self.lines.extend(format_record(r) for r in report_records(report, self.limit))
        else:
            self.lines.extend(render_report(report, self.limit))

    def finish(self) -> int:
        for line in self.lines:
            print(line)
        return 1 if self.failed else 0


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e


def _read_algebra(path: str) -> AlgebraSpec:
    alg = parse_algebra(_read_file(path))
    return alg if alg.name else AlgebraSpec(alg.dim, alg.brackets, Path(path).stem, alg.labels)


def _witness(args, alg: AlgebraSpec) -> LinearMap:
    """--derivation FILE, or the first diagonal involutive derivation for --search diag."""
    if args.derivation:
        return parse_derivation(_read_file(args.derivation))
    patterns = diagonal_sign_patterns(alg, args.settings.search_max_dim)
    if not patterns:
        raise DomainError(f"no diagonal witness for {alg.name or 'the algebra'}")
    return LinearMap.diagonal(patterns[0])


def _signs(D: LinearMap) -> str:
    entries = D.diagonal_entries()
    return f"diag({', '.join(str(a) for a in entries)})" if entries is not None else D.describe()


def cmd_verify(args) -> int:
    """Filippov identity and antisymmetry of an algebra file."""
    alg = _read_algebra(args.algebra)
    out = Output(args)
    out.text(f"algebra {alg.name}: dim {alg.dim}, {len(alg.brackets)} brackets")
    out.report(verify_antisymmetry(alg))
    out.report(verify_filippov(alg))
    return out.finish()


def cmd_invariants(args) -> int:
    """dim A¹, dim Z(A) and dim Der(A)."""
    alg = _read_algebra(args.algebra)
    derived = derived_algebra(alg)
    centre = center(alg)
    der = derivation_space(alg)
    out = Output(args)
    out.text(
        f"algebra {alg.name}: dim {alg.dim}",
        f"A1: dim {derived.rank}, {derived.describe(alg.labels)}",
        f"Z(A): dim {centre.rank}, {centre.describe(alg.labels)}",
        f"Der(A): dim {len(der)}",
    )
    fields = {"record": "invariants", "algebra": alg.name, "dim": str(alg.dim)}
    fields |= {"derived": str(derived.rank), "center": str(centre.rank), "derivations": str(len(der))}
    if alg.dim == 5:
        filt = hypothesis_filter(alg)
        out.text(f"admissible (dim A1 <= 3, or dim A1 = 4 and Z(A) != 0): {'yes' if filt.passes else 'no'}")
        fields["admissible"] = "yes" if filt.passes else "no"
    out.record(**fields)
    return out.finish()


def cmd_involutive(args) -> int:
    """Verify a given derivation, or list the diagonal involutive derivations."""
    alg = _read_algebra(args.algebra)
    out = Output(args)
    if args.search:
        patterns = diagonal_sign_patterns(alg, args.settings.search_max_dim)
        if not patterns:
            out.text("no diagonal witness")
        out.text(*(f"diag({', '.join(map(str, p))})" for p in patterns))
        for p in patterns:
            out.record(record="witness", algebra=alg.name, signs=",".join(map(str, p)))
        return out.finish()
    D = parse_derivation(_read_file(args.derivation))
    report = verify_involutive(alg, D)
    out.report(report)
    if report.passed:
        split = eigensplit(alg, D)
        out.text(f"A_1 = {split.plus.describe(alg.labels)}", f"A_-1 = {split.minus.describe(alg.labels)}")
        out.record(record="split", plus=str(split.plus.rank), minus=str(split.minus.rank))
    return out.finish()


def cmd_prelie(args) -> int:
    """3-pre-Lie products {}_D and {}_A of an involutive derivation."""
    alg = _read_algebra(args.algebra)
    D = _witness(args, alg)
    out = Output(args)
    out.text(f"witness {_signs(D)}")
    if args.mode in ("D", "both"):
        report = verify_prelie(prelie_from_D(alg, D))
        report.name = "pre-lie {}_D"
        out.report(report)
        out.report(verify_D_isomorphism(alg, D))
    if args.mode in ("A", "both"):
        P = prelie_compatible(alg, D)
        report = verify_prelie(P)
        report.name = "pre-lie {}_A"
        out.report(report)
        if report.passed:
            check = CheckReport("subadjacent", checked=1)
            if subadjacent(P) != alg:
                check.add_violation("sub-adjacent bracket = [,,]", (alg.name,), "differs", "original bracket")
            out.report(check)
    return out.finish()


def cmd_semidirect(args) -> int:
    """Print A⋉A* as an algebra file."""
    print(emit_algebra(semidirect(_read_algebra(args.algebra))), end="")
    return 0


def cmd_cybe(args) -> int:
    """[[r,r,r]] for the r-matrix of an involutive derivation."""
    alg = _read_algebra(args.algebra)
    D = _witness(args, alg)
    out = Output(args)
    report = verify_cybe(semidirect(alg), r_from_D(alg, D), limit=out.limit)
    out.text(f"witness {_signs(D)}")
    out.report(report)
    if report.passed:
        out.text("[[r,r,r]] = 0")
    return out.finish()


def cmd_bialgebra(args) -> int:
    """Full pipeline: r, Δ and every bialgebra check, then Δ in wedge normal form."""
    alg = _read_algebra(args.algebra)
    D = _witness(args, alg)
    out = Output(args)
    run = run_witness(alg, D, out.limit)
    out.text(f"witness {_signs(D)}")
    out.report(run.report)
    out.text(*emit_coproduct(run.coproduct))
    if out.records:
        out.lines.extend(format_record(r) for r in coproduct_records(run.coproduct))
    return out.finish()


def _parse_params(items: list[str] | None) -> dict[str, str]:
    params = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise ParameterError(f"expected name=value, got {item!r}")
        params[name.strip()] = value.strip()
    return params


def _case_header(out: Output, result) -> None:
    entry = get_entry(result.case_id)
    out.text(f"case {result.case_id} (dim {entry.dim})")
    out.text(*(f"  {line}" for line in result.algebra.describe()))
    out.text(*(f"  note: {note}" for note in result.notes))


def cmd_catalog(args) -> int:
    """List, reproduce and compare the built-in algebras."""
    settings: Settings = args.settings
    out = Output(args)
    params = _parse_params(args.params)
    if args.list or not (args.case or args.all):
        for entry in list_cases():
            tables = f"{entry.mu_table}/{entry.delta_table}" if entry.mu_table else "-"
            out.text(f"{entry.case_id:<8} dim {entry.dim}  tables {tables:<13} params {','.join(entry.params) or '-'}")
            out.record(
                record="case", case=entry.case_id, dim=str(entry.dim), tables=tables, params=",".join(entry.params)
            )
        return out.finish()

    common = dict(defaults=settings.catalog_params, max_dim=settings.search_max_dim, report_limit=out.limit)
    if args.case:
        results = [reproduce_case(args.case, params, **common)]
    else:
        results = run_catalog(params, **common)
    for result in results:
        status = "pass" if result.passed else "fail"
        if result.witness is None:
            status = "no-witness" if result.passed else "fail"
        if args.case:
            _case_header(out, result)
            if result.witness is not None:
                out.text(f"witness {_signs(result.witness)}")
            for report in result.reports:
                out.report(report)
            if result.coproduct is not None:
                out.text(*emit_coproduct(result.coproduct))
        else:
            out.failed = out.failed or not result.passed
            out.text(f"{result.case_id:<8} {status}" + (f"  witness {_signs(result.witness)}" if result.witness else ""))
        out.record(
            record="case",
            case=result.case_id,
            status=status,
            witness=_signs(result.witness) if result.witness else "",
        )
        if args.verify_paper:
            ledger = compare_with_paper(result.case_id, result=result)
            out.text(*render_ledger(ledger))
            if out.records:
                out.lines.extend(format_record(r) for r in ledger_records(ledger))
    return out.finish()


def cmd_config(args) -> int:
    """Show or change the settings."""
    settings: Settings = args.settings
    if args.action == "show":
        print(settings_toml(settings), end="")
        return 0
    try:
        updated = update_setting(settings, args.key, args.value)
    except KeyError:
        print(f"error: unknown setting {args.key!r}", file=sys.stderr)
        return 2
    path = save_settings(updated)
    print(f"saved {args.key} to {path}")
    return 0


def _add_witness_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--derivation", "-d", metavar="FILE", help="Derivation file")
    group.add_argument("--search", choices=["diag"], help="Use the first diagonal involutive derivation")


def main(argv: list[str] | None = None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "records"], default=None, help="Report format")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        description="3-Lie algebras, involutive derivations and local cocycle 3-Lie bialgebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Verify command
    verify_parser = subparsers.add_parser("verify", parents=[common], help="Check the Filippov identity")
    verify_parser.add_argument("algebra", help="Algebra file")
    verify_parser.set_defaults(func=cmd_verify)

    # Invariants command
    inv_parser = subparsers.add_parser("invariants", parents=[common], help="dim A1, Z(A) and Der(A)")
    inv_parser.add_argument("algebra", help="Algebra file")
    inv_parser.set_defaults(func=cmd_invariants)

    # Involutive command
    invol_parser = subparsers.add_parser("involutive", parents=[common], help="Involutive derivations")
    invol_parser.add_argument("algebra", help="Algebra file")
    _add_witness_options(invol_parser)
    invol_parser.set_defaults(func=cmd_involutive)

    # Pre-Lie command
    prelie_parser = subparsers.add_parser("prelie", parents=[common], help="3-pre-Lie products of a witness")
    prelie_parser.add_argument("algebra", help="Algebra file")
    _add_witness_options(prelie_parser)
    prelie_parser.add_argument("--mode", choices=["D", "A", "both"], default="both", help="Which product")
    prelie_parser.set_defaults(func=cmd_prelie)

    # Semidirect command
    semi_parser = subparsers.add_parser("semidirect", parents=[common], help="Emit A⋉A* as an algebra file")
    semi_parser.add_argument("algebra", help="Algebra file")
    semi_parser.set_defaults(func=cmd_semidirect)

    # CYBE command
    cybe_parser = subparsers.add_parser("cybe", parents=[common], help="Check [[r,r,r]] = 0")
    cybe_parser.add_argument("algebra", help="Algebra file")
    _add_witness_options(cybe_parser)
    cybe_parser.set_defaults(func=cmd_cybe)

    # Bialgebra command
    bi_parser = subparsers.add_parser("bialgebra", parents=[common], help="Build and check the coproduct")
    bi_parser.add_argument("algebra", help="Algebra file")
    _add_witness_options(bi_parser)
    bi_parser.set_defaults(func=cmd_bialgebra)

    # Catalog command
    cat_parser = subparsers.add_parser("catalog", parents=[common], help="Built-in 4- and 5-dim algebras")
    which = cat_parser.add_mutually_exclusive_group()
    which.add_argument("--list", action="store_true", help="List case ids")
    which.add_argument("--case", metavar="ID", help="Reproduce one case, e.g. 4-b1")
    which.add_argument("--all", action="store_true", help="Reproduce every case")
    cat_parser.add_argument("--params", nargs="+", metavar="NAME=VALUE", help="e.g. alpha=2 beta=1/3")
    cat_parser.add_argument("--verify-paper", action="store_true", help="Compare with the printed tables")
    cat_parser.set_defaults(func=cmd_catalog)

    # Config command
    config_parser = subparsers.add_parser("config", parents=[common], help="Show or change settings")
    config_sub = config_parser.add_subparsers(dest="action", required=True)
    config_sub.add_parser("show", help="Print effective settings")
    set_parser = config_sub.add_parser("set", help="Validate and save one setting")
    set_parser.add_argument("key", help="e.g. report_limit or catalog_params.alpha")
    set_parser.add_argument("value")
    config_parser.set_defaults(func=cmd_config)

    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    try:
        args.settings = load_settings()
    except (ValidationError, OSError, ValueError) as e:
        print(f"error: cannot load settings: {e}", file=sys.stderr)
        return 2
    level = "DEBUG" if args.verbose else args.settings.log_level
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    args.format = args.format or args.settings.output_format

    try:
        return args.func(args)
    except (Lie3Error, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
