"""Data models for the 3-Lie toolkit."""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations

from lie3.domain import from_domain, to_domain
from lie3.exceptions import ShapeError
from lie3.scalars import (
    ONE,
    ZERO,
    Vector,
    as_vector,
    check_dim,
    format_scalar,
    format_vector,
    is_zero,
    support,
    vec_combine,
)

Triple = tuple[int, int, int]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq (entries assumed distinct)."""
    inversions = sum(seq[a] > seq[b] for a in range(len(seq)) for b in range(a + 1, len(seq)))
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class LinearMap:
    """A matrix of exact rationals; column j is the image of basis vector j."""

    rows: tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(as_vector(r) for r in self.rows)
        if not rows:
            raise ShapeError("linear map needs at least one row")
        width = len(rows[0])
        for r in rows:
            check_dim(r, width, "matrix row")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "LinearMap":
        return cls(tuple((ZERO,) * (n if m is None else m) for _ in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int | Fraction]) -> "LinearMap":
        values = as_vector(entries)
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]]) -> "LinearMap":
        return cls(tuple(zip(*columns)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def dim(self) -> int:
        """Dimension of a square map."""
        if self.n_rows != self.n_cols:
            raise ShapeError(f"{self.n_rows}x{self.n_cols} map is not square")
        return self.n_rows

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        check_dim(v, self.n_cols, "argument")
        nz = support(v)
        return tuple(sum((r[j] * c for j, c in nz), ZERO) for r in self.rows)

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        return self.apply(v)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition self ∘ other."""
        if self.n_cols != other.n_rows:
            raise ShapeError(f"cannot compose {self.n_rows}x{self.n_cols} with {other.n_rows}x{other.n_cols}")
        product = to_domain(self.rows, self.n_cols).matmul(to_domain(other.rows, other.n_cols))
        return LinearMap(tuple(from_domain(product)))

    def _check_same_shape(self, other: "LinearMap") -> None:
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeError(f"shape mismatch {self.n_rows}x{self.n_cols} vs {other.n_rows}x{other.n_cols}")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._check_same_shape(other)
        return LinearMap(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + other.scale(-1)

    def __neg__(self) -> "LinearMap":
        return self.scale(-1)

    def scale(self, c: int | Fraction) -> "LinearMap":
        c = Fraction(c)
        return LinearMap(tuple(tuple(c * a for a in r) for r in self.rows))

    def transpose(self) -> "LinearMap":
        return LinearMap(tuple(zip(*self.rows)))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def is_identity(self) -> bool:
        return self.n_rows == self.n_cols and self == LinearMap.identity(self.n_rows)

    def diagonal_entries(self) -> Vector | None:
        """The diagonal when the map is diagonal, else None."""
        for i, r in enumerate(self.rows):
            for j, a in enumerate(r):
                if a and i != j:
                    return None
        return tuple(self.rows[i][i] for i in range(min(self.n_rows, self.n_cols)))

    def describe(self) -> str:
        return "[" + "; ".join(" ".join(format_scalar(a) for a in r) for r in self.rows) + "]"

    def flatten(self) -> Vector:
        """Row-major coordinates, used to treat End(A) as a vector space."""
        return tuple(a for r in self.rows for a in r)

    @classmethod
    def unflatten(cls, coords: Sequence[Fraction], n: int) -> "LinearMap":
        check_dim(coords, n * n, "matrix coordinates")
        return cls(tuple(tuple(coords[i * n:(i + 1) * n]) for i in range(n)))


@dataclass(frozen=True)
class AlgebraSpec:
    """A 3-Lie algebra given by structure constants on strictly increasing triples.

    brackets[(i, j, k)] is the coordinate vector of [x_i, x_j, x_k] for
    0-based i < j < k. Other orders follow by permutation sign.
    """

    dim: int
    brackets: Mapping[Triple, Vector] = field(default_factory=dict)
    name: str = field(default="", compare=False)
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ShapeError(f"algebra dimension must be positive, got {self.dim}")
        clean: dict[Triple, Vector] = {}
        for key, value in self.brackets.items():
            if len(key) != 3 or not all(0 <= i < self.dim for i in key):
                raise ShapeError(f"bracket triple {key} out of range for dim {self.dim}")
            if not key[0] < key[1] < key[2]:
                raise ShapeError(f"bracket triple {key} is not strictly increasing")
            vec = as_vector(value)
            check_dim(vec, self.dim, f"bracket {key}")
            if not is_zero(vec):
                clean[tuple(key)] = vec
        object.__setattr__(self, "brackets", dict(sorted(clean.items())))
        labels = tuple(self.labels) or default_labels(self.dim)
        if len(labels) != self.dim:
            raise ShapeError(f"{len(labels)} basis labels for dim {self.dim}")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_relations(
        cls,
        dim: int,
        relations: Iterable[tuple[Sequence[int], Sequence[Fraction]]],
        name: str = "",
        labels: Sequence[str] = (),
    ) -> "AlgebraSpec":
        """Build from (triple, vector) pairs in any index order; repeated triples add up."""
        acc: dict[Triple, Vector] = {}
        for triple, value in relations:
            triple = tuple(triple)
            if len(set(triple)) != 3:
                continue
            ordered = tuple(sorted(triple))
            sign = permutation_sign(triple)
            vec = as_vector(value)
            check_dim(vec, dim, f"bracket {triple}")
            prev = acc.get(ordered, (ZERO,) * dim)
            acc[ordered] = vec_combine(dim, [(ONE, prev), (Fraction(sign), vec)])
        return cls(dim, acc, name, tuple(labels))

    @classmethod
    def abelian(cls, dim: int, name: str = "abelian") -> "AlgebraSpec":
        return cls(dim, {}, name)

    @cached_property
    def signed_table(self) -> dict[Triple, tuple[tuple[int, Fraction], ...]]:
        """Sparse [x_a, x_b, x_c] for every ordering of every stored triple."""
        table: dict[Triple, tuple[tuple[int, Fraction], ...]] = {}
        for key, vec in self.brackets.items():
            nz = tuple(support(vec))
            for perm in permutations(key):
                sign = permutation_sign(perm)
                table[perm] = nz if sign > 0 else tuple((l, -c) for l, c in nz)
        return table

    def is_abelian(self) -> bool:
        return not self.brackets

    def describe(self) -> list[str]:
        """One `[xi,xj,xk] = ...` line per stored triple."""
        return [
            f"[{self.labels[i]},{self.labels[j]},{self.labels[k]}] = {format_vector(v, self.labels)}"
            for (i, j, k), v in self.brackets.items()
        ]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held by its reduced row-echelon basis."""

    dim: int
    basis: tuple[Vector, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_whole(self) -> bool:
        return self.rank == self.dim

    def describe(self, labels: Sequence[str]) -> str:
        if not self.basis:
            return "0"
        return "span{" + ", ".join(format_vector(v, labels) for v in self.basis) + "}"


@dataclass(frozen=True)
class Representation:
    """A representation (V, rho) of an algebra on an m-dimensional module.

    rho holds the m x m map for each 0-based pair i < j; missing pairs act as zero.
    """

    algebra: AlgebraSpec
    module_dim: int
    rho: Mapping[tuple[int, int], LinearMap] = field(default_factory=dict)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n, m = self.algebra.dim, self.module_dim
        if m < 1:
            raise ShapeError(f"module dimension must be positive, got {m}")
        clean: dict[tuple[int, int], LinearMap] = {}
        for (i, j), mat in self.rho.items():
            if not (0 <= i < j < n):
                raise ShapeError(f"representation pair {(i, j)} invalid for dim {n}")
            if (mat.n_rows, mat.n_cols) != (m, m):
                raise ShapeError(f"rho{(i + 1, j + 1)} is {mat.n_rows}x{mat.n_cols}, module dim is {m}")
            if not mat.is_zero():
                clean[(i, j)] = mat
        object.__setattr__(self, "rho", dict(sorted(clean.items())))

    def on_basis(self, i: int, j: int) -> LinearMap:
        """rho(x_i, x_j) with the antisymmetric sign."""
        if i == j:
            return LinearMap.zero(self.module_dim)
        if i < j:
            return self.rho.get((i, j)) or LinearMap.zero(self.module_dim)
        mat = self.rho.get((j, i))
        return -mat if mat is not None else LinearMap.zero(self.module_dim)

    def act(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> LinearMap:
        """rho(u, v) for arbitrary algebra vectors, extended bilinearly."""
        n = self.algebra.dim
        check_dim(u, n)
        check_dim(v, n)
        result = LinearMap.zero(self.module_dim)
        for i, a in support(u):
            for j, b in support(v):
                if i != j and (min(i, j), max(i, j)) in self.rho:
                    result = result + self.on_basis(i, j).scale(a * b)
        return result

    def act_on(self, u: Sequence[Fraction], v: Sequence[Fraction], w: Sequence[Fraction]) -> Vector:
        """rho(u, v)w, summed over basis pairs without building rho(u, v)."""
        n, m = self.algebra.dim, self.module_dim
        check_dim(u, n)
        check_dim(v, n)
        check_dim(w, m)
        terms = []
        for i, a in support(u):
            for j, b in support(v):
                mat = self.rho.get((min(i, j), max(i, j))) if i != j else None
                if mat is not None:
                    terms.append((a * b if i < j else -a * b, mat.apply(w)))
        return vec_combine(m, terms)


@dataclass(frozen=True)
class Violation:
    """One failed instance of an identity."""

    identity: str
    witness: tuple[str, ...]  # 1-based labels of the basis tuple
    lhs: str
    rhs: str


@dataclass
class CheckReport:
    """Outcome of a verification: violations, nested sub-checks and notes."""

    name: str
    checked: int = 0  # basis tuples examined
    violations: list[Violation] = field(default_factory=list)
    children: list["CheckReport"] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and all(c.passed for c in self.children)

    def add_violation(self, identity: str, witness: Iterable[str], lhs: str, rhs: str) -> None:
        self.violations.append(Violation(identity, tuple(witness), lhs, rhs))

    def add_child(self, child: "CheckReport") -> "CheckReport":
        self.children.append(child)
        return child

    def failed_checks(self) -> list[str]:
        """Names of the failing leaf checks, depth first."""
        if self.passed:
            return []
        names = [] if not self.violations else [self.name]
        for c in self.children:
            names.extend(c.failed_checks())
        return names
