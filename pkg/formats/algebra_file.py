"""AlgebraFile reader and writer.

    algebra b1                    # optional name
    dim 4
    basis x1 x2 x3 x4             # optional, defaults to x1..xn
    bracket 2 3 4 -> 1:1          # [x2,x3,x4] = x1
    bracket 1 3 4 -> 2:1 1:-1/2   # several l:coeff terms add up

Indices are 1-based and every bracket triple must be strictly increasing.
"""

import logging

from lie3.exceptions import ParseError, ShapeError
from lie3.models import AlgebraSpec, permutation_sign
from lie3.scalars import ZERO, format_scalar, parse_scalar

logger = logging.getLogger(__name__)


def _int(token: str, what: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line_number) from None


def _bracket(tokens: list[str], dim: int, line_number: int) -> tuple[tuple[int, int, int], list]:
    if "->" not in tokens:
        raise ParseError("bracket line needs `i j k -> l:coeff ...`", line_number)
    arrow = tokens.index("->")
    lhs, rhs = tokens[:arrow], tokens[arrow + 1:]
    if len(lhs) != 3:
        raise ParseError(f"bracket needs three indices, got {len(lhs)}", line_number)
    triple = tuple(_int(t, "bracket index", line_number) for t in lhs)
    for i in triple:
        if not 1 <= i <= dim:
            raise ParseError(f"index {i} out of range 1..{dim}", line_number)
    if len(set(triple)) != 3:
        raise ParseError(f"repeated index in bracket {' '.join(lhs)}; such brackets vanish", line_number)
    if not triple[0] < triple[1] < triple[2]:
        ordered = sorted(triple)
        flip = "keep" if permutation_sign(triple) > 0 else "negate"
        raise ParseError(
            f"unordered triple {' '.join(lhs)}: write `bracket {' '.join(map(str, ordered))}` "
            f"and {flip} the coefficients",
            line_number,
        )
    vec = [ZERO] * dim
    if not rhs:
        raise ParseError("bracket line has no `l:coeff` terms", line_number)
    for term in rhs:
        if term == "0":
            continue
        l_text, sep, c_text = term.partition(":")
        if not sep:
            raise ParseError(f"term {term!r} must read l:coeff", line_number)
        l = _int(l_text, "result index", line_number)
        if not 1 <= l <= dim:
            raise ParseError(f"index {l} out of range 1..{dim}", line_number)
        try:
            vec[l - 1] += parse_scalar(c_text)
        except ValueError as e:
            raise ParseError(str(e), line_number) from None
    return (triple[0] - 1, triple[1] - 1, triple[2] - 1), vec


def parse_algebra(text: str) -> AlgebraSpec:
    """Read an AlgebraFile into an AlgebraSpec."""
    name = ""
    dim: int | None = None
    labels: tuple[str, ...] = ()
    brackets: dict[tuple[int, int, int], tuple] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *rest = line.split()
        if keyword == "algebra":
            name = line[len("algebra"):].strip()
        elif keyword == "dim":
            if dim is not None:
                raise ParseError("`dim` given twice", line_number)
            if len(rest) != 1:
                raise ParseError("`dim` takes one integer", line_number)
            dim = _int(rest[0], "dim", line_number)
            if dim < 1:
                raise ParseError(f"dim must be positive, got {dim}", line_number)
        elif keyword == "basis":
            if dim is None:
                raise ParseError("`basis` before `dim`", line_number)
            if len(rest) != dim or len(set(rest)) != dim:
                raise ParseError(f"`basis` needs {dim} distinct labels, got {len(rest)}", line_number)
            labels = tuple(rest)
        elif keyword == "bracket":
            if dim is None:
                raise ParseError("`bracket` before `dim`", line_number)
            key, vec = _bracket(rest, dim, line_number)
            if key in brackets:
                raise ParseError(f"duplicate bracket {' '.join(str(i + 1) for i in key)}", line_number)
            brackets[key] = tuple(vec)
        else:
            raise ParseError(f"unknown directive {keyword!r}", line_number)
    if dim is None:
        raise ParseError("missing `dim` line")
    try:
        alg = AlgebraSpec(dim, brackets, name, labels)
    except ShapeError as e:
        raise ParseError(str(e)) from None
    logger.debug("parsed algebra %r: dim %d, %d brackets", name, dim, len(alg.brackets))
    return alg


def emit_algebra(alg: AlgebraSpec) -> str:
    """Canonical AlgebraFile text; parse_algebra(emit_algebra(a)) == a."""
    lines = []
    if alg.name:
        lines.append(f"algebra {alg.name}")
    lines.append(f"dim {alg.dim}")
    lines.append("basis " + " ".join(alg.labels))
    for (i, j, k), vec in alg.brackets.items():
        terms = " ".join(f"{l + 1}:{format_scalar(c)}" for l, c in enumerate(vec) if c)
        lines.append(f"bracket {i + 1} {j + 1} {k + 1} -> {terms}")
    return "\n".join(lines) + "\n"
