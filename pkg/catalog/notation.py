"""Reader for the printed table notation.

A bracket line reads `x2 x3 x1* = -x4*`; a coproduct line reads
`x3 = x1^x4*^x2* + x2^x4*^x1*`, and several labels may share one value as in
`x2* = x3* = 0`. Coefficients are integers, fractions, parameter names and
parenthesised sums such as `(1+beta)`, multiplied by juxtaposition.
"""

import re
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction

from lie3.exceptions import ParseError
from lie3.scalars import ONE, ZERO, Vector, parse_scalar
from lie3.tensor import Tensor, wedge3

_TOKEN = re.compile(r"\s*(?:(?P<label>x\d+\*?)|(?P<number>\d+(?:/\d+)?)|(?P<name>[a-z]+)|(?P<op>[-+^()=]))")


@dataclass(frozen=True)
class PrintedRelation:
    """One printed relation: a bracket value or a coproduct image."""

    line_number: int
    key: tuple[int, ...]  # bracket arguments, or the single coproduct argument
    value: Vector | Tensor
    text: str
    malformed: bool = False  # a wedge with a repeated factor


def label_index(label: str, n: int, allow_star: bool = True) -> int:
    """0-based index of `xi` (i-1) or `xi*` (n+i-1) in a space of base dim n."""
    starred = label.endswith("*")
    if starred and not allow_star:
        raise ValueError(f"starred label {label!r} not allowed here")
    i = int(label[1:-1] if starred else label[1:])
    if not 1 <= i <= n:
        raise ValueError(f"label {label!r} out of range x1..x{n}")
    return i - 1 + (n if starred else 0)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos:].strip()[:1]!r}")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
        pos = m.end()
    return tokens


class _Reader:
    """Recursive-descent reader over one side of a relation."""

    def __init__(self, tokens: list[tuple[str, str]], params: Mapping[str, Fraction], n: int, allow_star: bool):
        self.tokens = tokens
        self.pos = 0
        self.params = params
        self.n = n
        self.allow_star = allow_star
        self.repeated_factor = False

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of line")
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok[1]!r}")

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)

    def scalar_atom(self) -> Fraction:
        kind, value = self.take()
        if kind == "number":
            return parse_scalar(value)
        if kind == "name":
            if value not in self.params:
                raise ValueError(f"unknown parameter {value!r}")
            return self.params[value]
        if (kind, value) == ("op", "("):
            inner = self.scalar_sum()
            self.expect_op(")")
            return inner
        raise ValueError(f"unexpected {value!r}")

    def scalar_sum(self) -> Fraction:
        total = ZERO
        sign = ONE
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -ONE if self.take()[1] == "-" else ONE
        while True:
            term = self.scalar_atom()
            while self.peek() is not None and (self.peek()[0] in ("number", "name") or self.peek() == ("op", "(")):
                term *= self.scalar_atom()
            total += sign * term
            if self.peek() in (("op", "+"), ("op", "-")):
                sign = -ONE if self.take()[1] == "-" else ONE
                continue
            return total

    def coefficient(self) -> Fraction:
        """Product of coefficient atoms in front of a label."""
        coeff = ONE
        while True:
            tok = self.peek()
            if tok is None:
                raise ValueError("missing basis label")
            if tok[0] == "label":
                return coeff
            coeff *= self.scalar_atom()

    def labels(self) -> list[int]:
        kind, value = self.take()
        if kind != "label":
            raise ValueError(f"expected a basis label, got {value!r}")
        out = [label_index(value, self.n, self.allow_star)]
        while self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "label":
                raise ValueError(f"expected a basis label after '^', got {value!r}")
            out.append(label_index(value, self.n, self.allow_star))
        return out

    def linear_terms(self, arity: int) -> list[tuple[Fraction, list[int]]]:
        """`[+-] coeff label(^label)* ...` with every term of the given arity, or a bare 0."""
        if self.tokens == [("number", "0")]:
            self.pos = 1
            return []
        terms = []
        sign = ONE
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -ONE if self.take()[1] == "-" else ONE
        while True:
            coeff = self.coefficient()
            factors = self.labels()
            if len(factors) != arity:
                raise ValueError(f"expected {arity} factor(s), got {len(factors)}")
            if len(set(factors)) != len(factors):
                self.repeated_factor = True
            terms.append((sign * coeff, factors))
            if self.at_end():
                return terms
            kind, value = self.take()
            if (kind, value) not in (("op", "+"), ("op", "-")):
                raise ValueError(f"expected '+' or '-', got {value!r}")
            sign = -ONE if value == "-" else ONE


def _split(line: str) -> list[str]:
    sides = [s.strip() for s in line.split("=")]
    if len(sides) < 2 or not all(sides):
        raise ValueError("expected `lhs = value`")
    return sides


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def parse_bracket_table(
    text: str, n: int, params: Mapping[str, Fraction], allow_star: bool = True
) -> list[PrintedRelation]:
    """Bracket lines `a b c = expr` over a space of base dim n (2n when starred labels are allowed)."""
    total = 2 * n if allow_star else n
    out: list[PrintedRelation] = []
    for number, line in _lines(text):
        try:
            sides = _split(line)
            if len(sides) != 2:
                raise ValueError("a bracket line has exactly one '='")
            args = _tokenize(sides[0])
            if len(args) != 3 or any(kind != "label" for kind, _ in args):
                raise ValueError("left side must be three basis labels")
            key = tuple(label_index(v, n, allow_star) for _, v in args)
            reader = _Reader(_tokenize(sides[1]), params, n, allow_star)
            vec = [ZERO] * total
            for coeff, (l,) in reader.linear_terms(1):
                vec[l] += coeff
        except ValueError as e:
            raise ParseError(str(e), number) from None
        out.append(PrintedRelation(number, key, tuple(vec), line))
    return out


def parse_coproduct_table(text: str, n: int, params: Mapping[str, Fraction]) -> list[PrintedRelation]:
    """Coproduct lines `lhs [= lhs ...] = sum of c a^b^c` over the double space of base dim n."""
    out: list[PrintedRelation] = []
    for number, line in _lines(text):
        try:
            sides = _split(line)
            keys = []
            for side in sides[:-1]:
                toks = _tokenize(side)
                if len(toks) != 1 or toks[0][0] != "label":
                    raise ValueError(f"left side {side!r} must be a single basis label")
                keys.append(label_index(toks[0][1], n))
            reader = _Reader(_tokenize(sides[-1]), params, n, True)
            image = Tensor.zero(3, 2 * n)
            for coeff, factors in reader.linear_terms(3):
                vectors = []
                for f in factors:
                    v = [ZERO] * (2 * n)
                    v[f] = ONE
                    vectors.append(tuple(v))
                image = image + wedge3(*vectors).scale(coeff)
        except ValueError as e:
            raise ParseError(str(e), number) from None
        for k in keys:
            out.append(PrintedRelation(number, (k,), image, line, reader.repeated_factor))
    return out
