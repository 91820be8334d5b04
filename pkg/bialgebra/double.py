"""The double space A ∔ A*, the coadjoint representation and the semidirect product."""

from dataclasses import dataclass
from itertools import combinations

from lie3.algebra import ad, basis
from lie3.exceptions import ShapeError
from lie3.models import AlgebraSpec, Representation
from lie3.representation import semidirect_with


@dataclass(frozen=True)
class DoubleSpace:
    """Index convention for B = A ∔ A*: 0..n-1 are x_i, n..2n-1 are x_i*."""

    base: AlgebraSpec

    @property
    def n(self) -> int:
        return self.base.dim

    @property
    def dim(self) -> int:
        return 2 * self.base.dim

    def index_of(self, i: int, starred: bool = False) -> int:
        if not 0 <= i < self.n:
            raise ShapeError(f"basis index {i + 1} out of range 1..{self.n}")
        return i + self.n if starred else i

    def is_starred(self, k: int) -> bool:
        return k >= self.n

    def label(self, k: int) -> str:
        if not 0 <= k < self.dim:
            raise ShapeError(f"double-space index {k + 1} out of range 1..{self.dim}")
        return self.base.labels[k] if k < self.n else f"{self.base.labels[k - self.n]}*"

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.label(k) for k in range(self.dim))

    def pairing(self, k: int, l: int) -> int:
        """<x_i*, x_j> = δ_ij, symmetric, zero on A×A and A*×A*."""
        if self.is_starred(k) == self.is_starred(l):
            return 0
        return 1 if k % self.n == l % self.n else 0


def coadjoint(alg: AlgebraSpec) -> Representation:
    """ad*(x_i, x_j) = -ad(x_i, x_j)^T acting on A*."""
    e = basis(alg.dim)
    rho = {(i, j): -ad(alg, e[i], e[j]).transpose() for i, j in combinations(range(alg.dim), 2)}
    return Representation(alg, alg.dim, rho, name="ad*")


def semidirect(alg: AlgebraSpec) -> AlgebraSpec:
    """A ⋉_ad* A* on the double space."""
    double = DoubleSpace(alg)
    name = f"{alg.name}⋉{alg.name}*" if alg.name else ""
    return semidirect_with(alg, coadjoint(alg), double.labels[alg.dim:], name=name)
