"""Built-in 4- and 5-dimensional 3-Lie algebras.

Brackets are written in the table notation of catalog.notation with unstarred
labels only. Parameters default to alpha=1, beta=1, s=1, t=0, u=0.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from catalog.notation import parse_bracket_table
from lie3.exceptions import ParameterError, ParseError, UnknownCaseError
from lie3.models import AlgebraSpec
from lie3.scalars import to_scalar

DEFAULT_PARAMS: dict[str, Fraction] = {
    "alpha": Fraction(1),
    "beta": Fraction(1),
    "s": Fraction(1),
    "t": Fraction(0),
    "u": Fraction(0),
}


@dataclass(frozen=True)
class CatalogEntry:
    """One classified algebra with its printed tables."""

    case_id: str
    dim: int
    brackets: str
    params: tuple[str, ...] = ()  # parameters the brackets mention
    nonzero: tuple[str, ...] = ()  # parameters that must not vanish
    mu_table: str | None = None  # key into catalog.tables.TABLES
    delta_table: str | None = None
    witness: tuple[int, ...] | None = None  # pinned eigenvalue signs
    printed_brackets: str | None = None  # printed structure when it had to be repaired
    note: str = ""


def _entry(case_id: str, brackets: str, tables: str | None = None, **kw) -> CatalogEntry:
    dim = int(case_id[0])
    if tables is None:
        return CatalogEntry(case_id, dim, brackets, **kw)
    # mu3 pairs with delta3, psi3 with dpsi3
    delta = "d" + tables if tables.startswith("psi") else "delta" + tables.removeprefix("mu")
    return CatalogEntry(case_id, dim, brackets, mu_table=tables, delta_table=delta, **kw)


CATALOG: dict[str, CatalogEntry] = {
    e.case_id: e
    for e in [
        _entry("4-b1", "x2 x3 x4 = x1", "mu1", witness=(1, 1, 1, -1)),
        _entry("4-b2", "x1 x2 x3 = x1", "mu2"),
        _entry("4-c1", "x2 x3 x4 = x1\nx1 x3 x4 = x2", "mu3"),
        _entry(
            "4-c2",
            "x2 x3 x4 = alpha x1 + x2\nx1 x3 x4 = x2",
            "mu4",
            params=("alpha",),
            nonzero=("alpha",),
            note="[x1,x3,x4] is printed as e2 in the classification and read as x2",
        ),
        _entry("4-c3", "x1 x3 x4 = x1\nx2 x3 x4 = x2", "mu5"),
        _entry(
            "4-d1",
            "x2 x3 x4 = x1\nx1 x3 x4 = x2\nx1 x2 x4 = x3",
            "mu6",
            printed_brackets="x2 x3 x4 = x1\nx1 x3 x4 = x2\nx1 x2 x3 = x3",
            note="printed [x1,x2,x3]=x3 fails the Filippov identity; built [x1,x2,x4]=x3 as the mu6 table has it",
        ),
        _entry("4-e1", "x2 x3 x4 = -x2\nx1 x3 x4 = x1\nx1 x2 x3 = x3\nx1 x2 x4 = -x4", "mu7"),
        _entry("5-b1", "x2 x3 x4 = x1", "psi1"),
        _entry("5-b2", "x1 x2 x3 = x1", "psi17"),
        _entry("5-c1", "x2 x3 x4 = x1\nx3 x4 x5 = x2", "psi2"),
        _entry("5-c2", "x2 x3 x4 = x1\nx2 x4 x5 = x2\nx1 x4 x5 = x1", "psi3"),
        _entry("5-c3", "x2 x3 x4 = x1\nx1 x3 x4 = x2", "psi15"),
        _entry("5-c4", "x2 x3 x4 = x1\nx1 x3 x4 = x2\nx2 x4 x5 = x2\nx1 x4 x5 = x1", "psi6"),
        _entry(
            "5-c5",
            "x2 x3 x4 = x1\nx2 x4 x5 = alpha x1 + x2\nx1 x4 x5 = x1",
            params=("alpha",),
            nonzero=("alpha",),
            printed_brackets="x2 x3 x4 = x1\nx2 x4 x5 = alpha x1 + x2",
            note="printed structure fails the Filippov identity at (x4,x5 | x2,x3,x4); built with [x1,x4,x5]=x1",
        ),
        _entry(
            "5-c6",
            "x2 x3 x4 = alpha x1 + x2\nx1 x3 x4 = x2\nx2 x4 x5 = x2\nx1 x4 x5 = x1",
            "psi4",
            params=("alpha",),
            nonzero=("alpha",),
        ),
        _entry("5-c7", "x1 x3 x4 = x1\nx2 x3 x4 = x2", "psi8"),
        _entry("5-d1", "x2 x3 x4 = x1\nx2 x4 x5 = -x2\nx3 x4 x5 = x3", "psi7"),
        _entry(
            "5-d2",
            "x2 x3 x4 = x1\nx3 x4 x5 = alpha x2 + x3\nx2 x4 x5 = x3\nx1 x4 x5 = x1",
            "psi9",
            params=("alpha",),
            nonzero=("alpha",),
            printed_brackets="x2 x3 x4 = x1\nx3 x4 x5 = alpha x2 + x3",
            note=(
                "printed structure fails the Filippov identity at (x4,x5 | x2,x3,x4); "
                "built with [x2,x4,x5]=x3 and [x1,x4,x5]=x1 as the psi9 table has them"
            ),
        ),
        _entry("5-d3", "x2 x3 x4 = x1\nx3 x4 x5 = x3\nx2 x4 x5 = x2\nx1 x4 x5 = 2 x1", "psi10"),
        _entry("5-d4", "x2 x3 x4 = x1\nx1 x3 x4 = x2\nx1 x2 x4 = x3", "psi11"),
        _entry(
            "5-d5",
            "x1 x4 x5 = x1\nx2 x4 x5 = x3\nx3 x4 x5 = beta x2 + (1+beta) x3",
            "psi12",
            params=("beta",),
            nonzero=("beta",),
        ),
        _entry("5-d6", "x1 x4 x5 = x1\nx2 x4 x5 = x2\nx3 x4 x5 = x3", "psi13"),
        _entry(
            "5-d7",
            "x1 x4 x5 = x2\nx2 x4 x5 = x3\nx3 x4 x5 = s x1 + t x2 + u x3",
            "psi14",
            params=("s", "t", "u"),
            nonzero=("s",),
        ),
        _entry("5-e1", "x2 x3 x4 = x1\nx3 x4 x5 = x2\nx2 x4 x5 = x3\nx2 x3 x5 = x4"),
        _entry("5-e2", "x2 x3 x4 = x1\nx1 x3 x4 = x2\nx1 x2 x4 = x3\nx1 x2 x3 = x4"),
        _entry(
            "5-psi5",
            "x2 x3 x4 = alpha x1 + x2\nx1 x3 x4 = x2",
            "psi5",
            params=("alpha",),
            nonzero=("alpha",),
            note="appears in the printed tables only: the 4-c2 brackets with a central x5",
        ),
        _entry(
            "5-psi16",
            "x2 x3 x4 = -x2\nx1 x3 x4 = x1\nx1 x2 x3 = x3\nx1 x2 x4 = -x4",
            "psi16",
            note="appears in the printed tables only: the 4-e1 brackets with a central x5",
        ),
    ]
}


def list_cases() -> list[CatalogEntry]:
    return list(CATALOG.values())


def get_entry(case_id: str) -> CatalogEntry:
    try:
        return CATALOG[case_id]
    except KeyError:
        raise UnknownCaseError(f"unknown catalog case {case_id!r}; try `catalog --list`") from None


def resolve_params(
    entry: CatalogEntry,
    overrides: Mapping[str, str | int | Fraction] | None = None,
    defaults: Mapping[str, str | int | Fraction] | None = None,
) -> dict[str, Fraction]:
    """Defaults merged with overrides, checked against the case's legality rule."""
    merged: dict[str, Fraction] = dict(DEFAULT_PARAMS)
    for source in (defaults or {}, overrides or {}):
        for name, value in source.items():
            if name not in DEFAULT_PARAMS:
                raise ParameterError(f"unknown parameter {name!r}; known: {', '.join(DEFAULT_PARAMS)}")
            try:
                merged[name] = to_scalar(value)
            except (ValueError, ZeroDivisionError):
                raise ParameterError(f"parameter {name}: cannot read {value!r} as a rational") from None
    for name in entry.nonzero:
        if merged[name] == 0:
            raise ParameterError(f"{entry.case_id} needs {name} != 0")
    return merged


def _build(entry: CatalogEntry, text: str, params: Mapping[str, Fraction], name: str) -> AlgebraSpec:
    try:
        relations = parse_bracket_table(text, entry.dim, params, allow_star=False)
    except ParseError as e:
        raise ParseError(f"catalog case {entry.case_id}: {e.message}", e.line_number) from None
    return AlgebraSpec.from_relations(entry.dim, [(r.key, r.value) for r in relations], name)


def catalog_algebra(case_id: str, params: Mapping[str, str | int | Fraction] | None = None) -> AlgebraSpec:
    """The structure constants of a catalog case."""
    entry = get_entry(case_id)
    resolved = resolve_params(entry, params)
    return _build(entry, entry.brackets, resolved, case_id)


def printed_algebra(case_id: str, params: Mapping[str, str | int | Fraction] | None = None) -> AlgebraSpec | None:
    """The structure exactly as printed in the classification, for repaired cases."""
    entry = get_entry(case_id)
    if entry.printed_brackets is None:
        return None
    return _build(entry, entry.printed_brackets, resolve_params(entry, params), f"{case_id} (printed)")
