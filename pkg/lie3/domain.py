"""Conversion between Fraction rows and sympy DomainMatrix over QQ."""

from collections.abc import Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from lie3.scalars import Vector, check_dim


def to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = []
    for r in rows:
        check_dim(r, ncols, "matrix row")
        data.append([QQ(int(a.numerator), int(a.denominator)) for a in r])
    return DomainMatrix(data, (len(data), ncols), QQ)


def from_domain(dm: DomainMatrix) -> list[Vector]:
    return [tuple(Fraction(int(e.p), int(e.q)) for e in row) for row in dm.to_Matrix().tolist()]
