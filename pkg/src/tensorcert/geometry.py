"""Multiprojective points, Segre embeddings and flattening cohomology.

A shape (n_1, ..., n_k) stands for the product of projective spaces
P^{n_1} x ... x P^{n_k}.  Points carry one integer-or-rational
coordinate vector per factor; two points are the same exactly when all
factor vectors are pairwise proportional.  The Segre coordinates of a
point for a factor subset u are the entries of the outer product of the
selected factor vectors, flattened row-major so the last selected
factor's index varies fastest.

For a finite set S and subset u we report the pair

    h0 = (number of Segre coordinates for u) - rank,
    h1 = #S - rank,

where rank is the exact rank of the #S x M_u evaluation matrix.  h1 = 0
says the points impose independent conditions in the u-flattening and is
the workhorse hypothesis of every certificate downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, NamedTuple, Sequence

from .linalg import RatMatrix, in_row_span, rat_rank, solve_row_combination


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    if len(u) != len(v):
        return False
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def _canonical(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale so the first nonzero coordinate is 1."""
    for x in vec:
        if x:
            return tuple(y / x for y in vec)
    raise ValueError("zero coordinate vector")


@dataclass(frozen=True)
class MultiShape:
    """Tuple of projective dimensions, one per factor."""

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(int(n) for n in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("a shape needs at least one factor")
        if any(n < 0 for n in dims):
            raise ValueError("factor dimensions must be nonnegative")

    @property
    def k(self) -> int:
        return len(self.dims)

    @property
    def sizes(self) -> tuple[int, ...]:
        """Coordinate counts n_i + 1 per factor."""
        return tuple(n + 1 for n in self.dims)

    @property
    def ambient_dim(self) -> int:
        """Dimension M of the Segre target projective space."""
        return reduce(lambda a, b: a * b, self.sizes, 1) - 1

    @property
    def max_dim(self) -> int:
        return max(self.dims)

    @property
    def min_dim(self) -> int:
        return min(self.dims)

    def segre_length(self, subset: Sequence[int] | None = None) -> int:
        """Number of Segre coordinates M_u for the factor subset (default all)."""
        members = factor_subset(subset, self.k) if subset is not None else tuple(range(1, self.k + 1))
        out = 1
        for i in members:
            out *= self.dims[i - 1] + 1
        return out


def factor_subset(subset: Iterable[int], k: int) -> tuple[int, ...]:
    """Validate a nonempty subset of 1-based factor indices, sorted ascending."""
    members = tuple(int(i) for i in subset)
    if not members:
        raise ValueError("factor subset must be nonempty")
    if len(set(members)) != len(members):
        raise ValueError(f"factor subset {members} has repeated indices")
    if any(i < 1 or i > k for i in members):
        raise ValueError(f"factor subset {members} out of range for k={k}")
    return tuple(sorted(members))


@dataclass(frozen=True)
class FactorPartition:
    """Ordered bipartition (E, F) of the factor indices 1..k."""

    E: tuple[int, ...]
    F: tuple[int, ...]

    def __post_init__(self) -> None:
        E = tuple(int(i) for i in self.E)
        F = tuple(int(i) for i in self.F)
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "F", F)
        if not E or not F:
            raise ValueError("both sides of a partition must be nonempty")
        k = len(E) + len(F)
        if sorted(E + F) != list(range(1, k + 1)):
            raise ValueError(f"({E}, {F}) is not a partition of 1..{k}")
        if list(E) != sorted(E) or list(F) != sorted(F):
            raise ValueError("partition sides must be sorted ascending")

    @property
    def k(self) -> int:
        return len(self.E) + len(self.F)

    def swapped(self) -> "FactorPartition":
        return FactorPartition(self.F, self.E)

    def as_json(self) -> dict:
        return {"E": list(self.E), "F": list(self.F)}


def all_partitions(k: int) -> list[FactorPartition]:
    """All 2^k - 2 ordered proper bipartitions of {1..k}, by E-bitmask."""
    if k > 10:
        raise ValueError("exhaustive partition search is capped at 10 factors")
    out = []
    for mask in range(1, (1 << k) - 1):
        E = tuple(i + 1 for i in range(k) if mask >> i & 1)
        F = tuple(i + 1 for i in range(k) if not mask >> i & 1)
        out.append(FactorPartition(E, F))
    return out


@dataclass(frozen=True, eq=False)
class MultiPoint:
    """A point of the product, one nonzero coordinate vector per factor.

    Equality is projective: points compare equal when every factor pair
    is proportional.  The stored vectors keep the caller's scaling, so
    weighted sums over them are meaningful.
    """

    factors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        factors = tuple(tuple(Fraction(x) for x in f) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise ValueError("a point needs at least one factor")
        for i, f in enumerate(factors, start=1):
            if not f or not any(f):
                raise ValueError(f"factor {i} of a point must be a nonzero vector")
        canon = tuple(_canonical(f) for f in factors)
        object.__setattr__(self, "_canonical", canon)

    @classmethod
    def of(cls, *factors: Iterable) -> "MultiPoint":
        return cls(tuple(tuple(Fraction(x) for x in f) for f in factors))

    def canonical(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._canonical  # type: ignore[attr-defined]

    def replace_factor(self, index: int, vector: Iterable) -> "MultiPoint":
        """New point with 1-based factor ``index`` swapped out."""
        vec = tuple(Fraction(x) for x in vector)
        factors = list(self.factors)
        factors[index - 1] = vec
        return MultiPoint(tuple(factors))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoint):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def __repr__(self) -> str:
        parts = ["(" + ", ".join(str(x) for x in f) + ")" for f in self.factors]
        return "MultiPoint[" + " x ".join(parts) + "]"


@dataclass(frozen=True)
class PointSet:
    """Finite set of distinct points of a fixed shape, in a fixed order."""

    shape: MultiShape
    points: tuple[MultiPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise ValueError("a point set must be nonempty")
        sizes = self.shape.sizes
        for idx, p in enumerate(points):
            if len(p.factors) != self.shape.k:
                raise ValueError(f"point {idx} has {len(p.factors)} factors, shape has {self.shape.k}")
            for i, f in enumerate(p.factors):
                if len(f) != sizes[i]:
                    raise ValueError(
                        f"point {idx} factor {i + 1} has {len(f)} coordinates, expected {sizes[i]}"
                    )
        seen: dict = {}
        for idx, p in enumerate(points):
            key = p.canonical()
            if key in seen:
                raise ValueError(f"duplicate points at positions {seen[key]} and {idx}")
            seen[key] = idx

    def __len__(self) -> int:
        return len(self.points)

    def without(self, index: int) -> tuple[MultiPoint, ...]:
        return self.points[:index] + self.points[index + 1:]


@dataclass(frozen=True, eq=False)
class AmbientTensor:
    """A nonzero point of the Segre target space, compared projectively."""

    shape: MultiShape
    coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(Fraction(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.shape.ambient_dim + 1:
            raise ValueError(
                f"tensor has {len(coords)} coordinates, shape wants {self.shape.ambient_dim + 1}"
            )
        if not any(coords):
            raise ValueError("the zero tensor has no projective class")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AmbientTensor):
            return NotImplemented
        return self.shape == other.shape and _proportional(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((self.shape, _canonical(self.coords)))


class Cohomology(NamedTuple):
    h0: int
    h1: int


def segre_vector(point: MultiPoint, subset: Sequence[int] | None = None) -> tuple[Fraction, ...]:
    """Segre coordinates of ``point`` for the factor subset (default: all).

    Outer product of the selected factor vectors, flattened with the last
    selected factor's index varying fastest.
    """
    k = len(point.factors)
    members = factor_subset(subset, k) if subset is not None else tuple(range(1, k + 1))
    acc: tuple[Fraction, ...] = (Fraction(1),)
    for i in members:
        f = point.factors[i - 1]
        acc = tuple(a * b for a in acc for b in f)
    return acc


def segre_matrix(s: PointSet, subset: Sequence[int] | None = None) -> RatMatrix:
    """Evaluation matrix, one row of Segre coordinates per point of S."""
    return RatMatrix.from_rows([segre_vector(p, subset) for p in s.points])


@lru_cache(maxsize=None)
def _flattening_rank(s: PointSet, members: tuple[int, ...] | None) -> int:
    return rat_rank(segre_matrix(s, members))


def flattening_rank(s: PointSet, subset: Sequence[int] | None = None) -> int:
    members = factor_subset(subset, s.shape.k) if subset is not None else None
    return _flattening_rank(s, members)


def cohomology(s: PointSet, subset: Sequence[int] | None = None) -> Cohomology:
    """The pair (h0, h1) of the u-flattening of S; h1 = 0 means the points
    impose independent conditions there."""
    members = factor_subset(subset, s.shape.k) if subset is not None else None
    rank = _flattening_rank(s, members)
    m_u = s.shape.segre_length(members)
    return Cohomology(m_u - rank, len(s) - rank)


def segre_function(s: PointSet) -> tuple[int, ...]:
    """Ranks of the prefix flattenings u = {1}, {1,2}, ..., {1..k}."""
    k = s.shape.k
    return tuple(flattening_rank(s, tuple(range(1, i + 1))) for i in range(1, k + 1))


def factor_matrix(s: PointSet, index: int) -> RatMatrix:
    """Matrix of factor-``index`` coordinate vectors, one row per point."""
    if index < 1 or index > s.shape.k:
        raise ValueError(f"factor index {index} out of range")
    return RatMatrix.from_rows([p.factors[index - 1] for p in s.points])


@lru_cache(maxsize=None)
def factor_rank(s: PointSet, index: int) -> int:
    return rat_rank(factor_matrix(s, index))


def different_coordinates_violation(s: PointSet) -> tuple[int, int, int] | None:
    """First (factor, point a, point b) with proportional projections, if any."""
    canon = [p.canonical() for p in s.points]
    for i in range(s.shape.k):
        seen: dict = {}
        for idx, c in enumerate(canon):
            if c[i] in seen:
                return (i + 1, seen[c[i]], idx)
            seen[c[i]] = idx
    return None


def has_different_coordinates(s: PointSet) -> bool:
    """True when every factor projection is injective on S."""
    return different_coordinates_violation(s) is None


def factor_projection_sizes(s: PointSet) -> tuple[int, ...]:
    """Number of distinct projective values each factor projection takes."""
    canon = [p.canonical() for p in s.points]
    return tuple(len({c[i] for c in canon}) for i in range(s.shape.k))


def is_degenerate(s: PointSet) -> tuple[bool, int | None]:
    """Whether some factor projection fails to span its projective space.

    Returns (True, i) with the first failing 1-based factor, else
    (False, None).
    """
    for i in range(1, s.shape.k + 1):
        if factor_rank(s, i) < s.shape.dims[i - 1] + 1:
            return True, i
    return False, None


def assemble_tensor(weights: Sequence, s: PointSet) -> AmbientTensor:
    """The weighted sum of the Segre vectors of S as an ambient tensor."""
    ws = tuple(Fraction(w) for w in weights)
    if len(ws) != len(s):
        raise ValueError(f"{len(ws)} weights for {len(s)} points")
    if any(w == 0 for w in ws):
        raise ValueError("weights must be nonzero")
    total = [Fraction(0)] * (s.shape.ambient_dim + 1)
    for w, p in zip(ws, s.points):
        for j, x in enumerate(segre_vector(p)):
            total[j] += w * x
    if not any(total):
        raise ValueError("the weighted sum of the decomposition vanishes")
    return AmbientTensor(s.shape, tuple(total))


def decomposition_weights(tensor: AmbientTensor, s: PointSet) -> tuple[Fraction, ...] | None:
    """Exact weights expressing ``tensor`` over the Segre vectors of S."""
    if tensor.shape != s.shape:
        raise ValueError("tensor and point set have different shapes")
    return solve_row_combination(tensor.coords, segre_matrix(s))


def tensor_in_span(tensor: AmbientTensor, rows: RatMatrix) -> bool:
    return in_row_span(tensor.coords, rows)


def clear_caches() -> None:
    """Drop memoized flattening and factor ranks (used by invariance tests)."""
    _flattening_rank.cache_clear()
    factor_rank.cache_clear()
