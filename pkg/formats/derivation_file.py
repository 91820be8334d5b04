"""DerivationFile reader and writer.

    derivation D1        # optional name
    dim 4
    diag 1 1 1 -1        # either one diag line ...
    row 0 1 0 0          # ... or exactly dim row lines, row i holding the
    row 1 0 0 0          #     x_i coordinates of Dx_1 .. Dx_n
"""

import logging

from lie3.exceptions import ParseError
from lie3.models import LinearMap
from lie3.scalars import format_scalar, parse_scalar

logger = logging.getLogger(__name__)


def _scalars(tokens: list[str], line_number: int) -> tuple:
    try:
        return tuple(parse_scalar(t) for t in tokens)
    except ValueError as e:
        raise ParseError(str(e), line_number) from None


def parse_derivation(text: str) -> LinearMap:
    """Read a DerivationFile into the matrix of D."""
    name = ""
    dim: int | None = None
    diag: tuple | None = None
    rows: list[tuple] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *rest = line.split()
        if keyword == "derivation":
            name = line[len("derivation"):].strip()
        elif keyword == "dim":
            if dim is not None or len(rest) != 1 or not rest[0].isdigit() or int(rest[0]) < 1:
                raise ParseError("`dim` takes one positive integer, once", line_number)
            dim = int(rest[0])
        elif keyword in ("diag", "row"):
            if dim is None:
                raise ParseError(f"`{keyword}` before `dim`", line_number)
            if len(rest) != dim:
                raise ParseError(f"`{keyword}` needs {dim} entries, got {len(rest)}", line_number)
            if keyword == "diag":
                if diag is not None or rows:
                    raise ParseError("give either one `diag` line or the `row` lines", line_number)
                diag = _scalars(rest, line_number)
            else:
                if diag is not None:
                    raise ParseError("give either one `diag` line or the `row` lines", line_number)
                if len(rows) == dim:
                    raise ParseError(f"more than {dim} `row` lines", line_number)
                rows.append(_scalars(rest, line_number))
        else:
            raise ParseError(f"unknown directive {keyword!r}", line_number)
    if dim is None:
        raise ParseError("missing `dim` line")
    if diag is not None:
        D = LinearMap.diagonal(diag)
    elif len(rows) == dim:
        D = LinearMap(tuple(rows))
    else:
        raise ParseError(f"expected a `diag` line or {dim} `row` lines, got {len(rows)} rows")
    logger.debug("parsed derivation %r of dim %d", name, dim)
    return D


def emit_derivation(D: LinearMap, name: str = "") -> str:
    """DerivationFile text, using `diag` when D is diagonal."""
    lines = [f"derivation {name}"] if name else []
    lines.append(f"dim {D.dim}")
    diagonal = D.diagonal_entries()
    if diagonal is not None:
        lines.append("diag " + " ".join(format_scalar(a) for a in diagonal))
    else:
        lines.extend("row " + " ".join(format_scalar(a) for a in row) for row in D.rows)
    return "\n".join(lines) + "\n"
