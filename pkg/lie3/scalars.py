"""Exact rational scalars and dense coordinate vectors."""

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

from lie3.exceptions import ShapeError

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a Fraction or a `p`/`p/q` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ValueError(f"not a rational: {value!r}")


def parse_scalar(text: str) -> Fraction:
    """Parse `p` or `p/q`; anything else (decimals, exponents) is rejected."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator: {text!r}") from None


def format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise ShapeError(f"basis index {i + 1} out of range 1..{n}")
    return tuple(ONE if k == i else ZERO for k in range(n))


def as_vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(to_scalar(v) for v in values)


def check_dim(v: Sequence[Fraction], n: int, what: str = "vector") -> None:
    if len(v) != n:
        raise ShapeError(f"{what} has dimension {len(v)}, expected {n}")


def support(v: Sequence[Fraction]) -> list[tuple[int, Fraction]]:
    """Nonzero (index, coefficient) pairs in index order."""
    return [(i, c) for i, c in enumerate(v) if c]


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def vec_neg(v: Sequence[Fraction]) -> Vector:
    return tuple(-a for a in v)


def vec_combine(n: int, terms: Iterable[tuple[Fraction, Sequence[Fraction]]]) -> Vector:
    """Linear combination sum(c * v) of n-dimensional vectors."""
    acc = [ZERO] * n
    for c, v in terms:
        if not c:
            continue
        check_dim(v, n)
        for i, a in enumerate(v):
            if a:
                acc[i] += c * a
    return tuple(acc)


def format_vector(v: Sequence[Fraction], labels: Sequence[str]) -> str:
    """Render a vector as a signed sum of basis labels, e.g. `x1 - 1/2 x2`."""
    parts: list[str] = []
    for i, c in support(v):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = labels[i] if mag == 1 else f"{format_scalar(mag)} {labels[i]}"
        parts.append(f"{sign} {body}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


SparseVector = dict[int, Fraction]


def to_sparse(v: Sequence[Fraction]) -> SparseVector:
    return {i: c for i, c in enumerate(v) if c}


def to_dense(s: SparseVector, n: int) -> Vector:
    out = [ZERO] * n
    for i, c in s.items():
        out[i] = c
    return tuple(out)


def add_scaled(acc: SparseVector, c: Fraction, terms: Iterable[tuple[int, Fraction]]) -> None:
    """acc += c * terms, in place; terms are (index, coefficient) pairs."""
    for i, a in terms:
        acc[i] = acc.get(i, ZERO) + c * a


def drop_zeros(s: SparseVector) -> SparseVector:
    return {i: c for i, c in s.items() if c}


def accumulate(acc: dict[tuple[int, ...], SparseVector], key: tuple[int, ...], c: Fraction, terms) -> None:
    """acc[key] += c * terms for a table of sparse vectors keyed by index tuples."""
    add_scaled(acc.setdefault(key, {}), c, terms)
