"""Sparse exact tensors over a finite basis.

Entries are keyed by 0-based index tuples; absent keys are zero and no
stored coefficient is ever zero, so equality is a literal comparison.
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from itertools import permutations

from lie3.exceptions import ShapeError
from lie3.scalars import ZERO, format_scalar, support, to_scalar

Index = tuple[int, ...]

# (permutation of slots, sign) for S3
S3 = tuple(
    (perm, 1 if sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3)) % 2 == 0 else -1)
    for perm in permutations(range(3))
)


class Tensor:
    """An element of the rank-fold tensor power of a dim-dimensional space."""

    __slots__ = ("rank", "dim", "_entries")

    def __init__(self, rank: int, dim: int, entries: Mapping[Index, int | Fraction] | None = None):
        if rank < 1 or dim < 1:
            raise ShapeError(f"invalid tensor shape rank={rank} dim={dim}")
        self.rank = rank
        self.dim = dim
        self._entries: dict[Index, Fraction] = {}
        for index, coeff in (entries or {}).items():
            self._check_index(index)
            value = to_scalar(coeff)
            if value:
                self._entries[tuple(index)] = value

    def _check_index(self, index: Sequence[int]) -> None:
        if len(index) != self.rank:
            raise ShapeError(f"index {tuple(index)} has length {len(index)}, tensor rank is {self.rank}")
        for i in index:
            if not 0 <= i < self.dim:
                raise ShapeError(f"index {tuple(index)} out of range for dim {self.dim}")

    @classmethod
    def zero(cls, rank: int, dim: int) -> "Tensor":
        return cls(rank, dim)

    @classmethod
    def monomial(cls, dim: int, index: Sequence[int], coeff: int | Fraction = 1) -> "Tensor":
        return cls(len(index), dim, {tuple(index): coeff})

    @classmethod
    def from_terms(cls, rank: int, dim: int, terms: Iterable[tuple[Index, Fraction]]) -> "Tensor":
        """Accumulate (index, coefficient) pairs; repeated indices add up."""
        acc: dict[Index, Fraction] = {}
        for index, coeff in terms:
            if coeff:
                acc[index] = acc.get(index, ZERO) + coeff
        return cls(rank, dim, acc)

    @classmethod
    def outer(cls, *vectors: Sequence[Fraction]) -> "Tensor":
        """Tensor product v1 ⊗ v2 ⊗ ... of coordinate vectors."""
        if not vectors:
            raise ShapeError("outer product of no vectors")
        dim = len(vectors[0])
        for v in vectors:
            if len(v) != dim:
                raise ShapeError(f"outer product of vectors with dims {[len(w) for w in vectors]}")
        terms: list[tuple[Index, Fraction]] = [((), Fraction(1))]
        for v in vectors:
            nz = support(v)
            terms = [(idx + (i,), c * a) for idx, c in terms for i, a in nz]
        return cls.from_terms(len(vectors), dim, terms)

    @property
    def entries(self) -> dict[Index, Fraction]:
        return dict(self._entries)

    def __getitem__(self, index: Index) -> Fraction:
        return self._entries.get(tuple(index), ZERO)

    def items(self) -> list[tuple[Index, Fraction]]:
        """Nonzero entries in lexicographic index order."""
        return sorted(self._entries.items())

    def __iter__(self) -> Iterator[tuple[Index, Fraction]]:
        return iter(self.items())

    def iter_entries(self) -> Iterator[tuple[Index, Fraction]]:
        """Nonzero entries in storage order."""
        return iter(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def _check_compatible(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if (self.rank, self.dim) != (other.rank, other.dim):
            raise ShapeError(
                f"tensor shape mismatch: rank {self.rank}/dim {self.dim} vs rank {other.rank}/dim {other.dim}"
            )

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_compatible(other)
        acc = dict(self._entries)
        for index, coeff in other._entries.items():
            acc[index] = acc.get(index, ZERO) + coeff
        return Tensor(self.rank, self.dim, acc)

    def __neg__(self) -> "Tensor":
        return Tensor(self.rank, self.dim, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c: int | Fraction) -> "Tensor":
        c = to_scalar(c)
        return Tensor(self.rank, self.dim, {k: c * v for k, v in self._entries.items()})

    def __rmul__(self, c: int | Fraction) -> "Tensor":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.rank, self.dim, self._entries) == (other.rank, other.dim, other._entries)

    def __hash__(self) -> int:
        return hash((self.rank, self.dim, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"Tensor(rank={self.rank}, dim={self.dim}, nnz={len(self._entries)})"

    def permute(self, p: int, q: int) -> "Tensor":
        """Swap tensor slots p and q (1-based)."""
        return permute_factors(self, p, q)

    def map_slots(self, order: Sequence[int]) -> "Tensor":
        """Move the factor in slot order[k] to slot k (0-based slots)."""
        if sorted(order) != list(range(self.rank)):
            raise ShapeError(f"{tuple(order)} is not a permutation of {self.rank} slots")
        return Tensor(
            self.rank, self.dim, {tuple(idx[s] for s in order): c for idx, c in self._entries.items()}
        )


def tensor_add(a: Tensor, b: Tensor) -> Tensor:
    return a + b


def permute_factors(t: Tensor, p: int, q: int) -> Tensor:
    """Exchange the factors in slots p and q (1-based, p != q)."""
    if p == q or not (1 <= p <= t.rank and 1 <= q <= t.rank):
        raise ShapeError(f"invalid slot pair ({p}, {q}) for rank {t.rank}")
    order = list(range(t.rank))
    order[p - 1], order[q - 1] = order[q - 1], order[p - 1]
    return t.map_slots(order)


def wedge3(a: Sequence[Fraction], b: Sequence[Fraction], c: Sequence[Fraction]) -> Tensor:
    """Unnormalized alternating sum over S3 of a⊗b⊗c (six terms, no 1/6)."""
    if not len(a) == len(b) == len(c):
        raise ShapeError(f"wedge of vectors with dims {len(a)}, {len(b)}, {len(c)}")
    factors = (a, b, c)
    result = Tensor.zero(3, len(a))
    for perm, sign in S3:
        result = result + Tensor.outer(*(factors[k] for k in perm)).scale(sign)
    return result


def antisymmetrize(t: Tensor) -> Tensor:
    """Sum over S3 of sgn(σ)·σ(t), without the 1/6 factor."""
    if t.rank != 3:
        raise ShapeError(f"alternation needs rank 3, got rank {t.rank}")
    terms: list[tuple[Index, Fraction]] = []
    for index, coeff in t.items():
        for perm, sign in S3:
            terms.append((tuple(index[k] for k in perm), sign * coeff))
    return Tensor.from_terms(3, t.dim, terms)


def alternating_part(t: Tensor) -> tuple[Tensor, bool]:
    """Return the alternating projection of t and whether t already equals it."""
    alt = antisymmetrize(t).scale(Fraction(1, 6))
    return alt, alt == t


def wedge_coefficients(t: Tensor) -> dict[Index, Fraction]:
    """Coefficients of an alternating rank-3 tensor on the wedge basis a<b<c.

    An alternating t equals the sum over a<b<c of t[a,b,c]·wedge3(e_a, e_b, e_c).
    """
    if t.rank != 3:
        raise ShapeError(f"wedge normal form needs rank 3, got rank {t.rank}")
    return {index: coeff for index, coeff in t.items() if index[0] < index[1] < index[2]}


def format_tensor(t: Tensor, labels: Sequence[str], joiner: str = "⊗") -> str:
    """Signed sum of monomials, e.g. `x1⊗x2 - 2 x2⊗x1`."""
    if t.is_zero():
        return "0"
    parts: list[str] = []
    for index, coeff in t.items():
        body = joiner.join(labels[i] for i in index)
        mag = abs(coeff)
        term = body if mag == 1 else f"{format_scalar(mag)} {body}"
        parts.append(("- " if coeff < 0 else "+ ") + term)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def format_wedge(t: Tensor, labels: Sequence[str], joiner: str = "∧") -> str:
    """Wedge normal form of an alternating rank-3 tensor, e.g. `x1∧x2*∧x3* - x2∧x3*∧x4*`."""
    coeffs = wedge_coefficients(t)
    if not coeffs:
        return "0"
    parts: list[str] = []
    for index, coeff in sorted(coeffs.items()):
        body = joiner.join(labels[i] for i in index)
        mag = abs(coeff)
        term = body if mag == 1 else f"{format_scalar(mag)} {body}"
        parts.append(("- " if coeff < 0 else "+ ") + term)
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
