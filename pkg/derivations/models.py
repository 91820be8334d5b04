"""Data models for derivations."""

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from lie3.linalg import contains
from lie3.models import Subspace


@dataclass(frozen=True)
class EigenSplit:
    """A = A_1 ∔ A_-1 for an involutive derivation."""

    plus: Subspace  # ker(D - I)
    minus: Subspace  # ker(D + I)

    @property
    def dim(self) -> int:
        return self.plus.dim

    def part_of(self, v: Sequence[Fraction]) -> int | None:
        """+1 or -1 when v lies in exactly one part, else None."""
        in_plus, in_minus = contains(self.plus, v), contains(self.minus, v)
        if in_plus and not in_minus:
            return 1
        if in_minus and not in_plus:
            return -1
        return None

    def eigenbasis(self) -> list[tuple[tuple[Fraction, ...], int]]:
        """(vector, eigenvalue) pairs: the A_1 basis first, then A_-1."""
        return [(v, 1) for v in self.plus.basis] + [(v, -1) for v in self.minus.basis]
