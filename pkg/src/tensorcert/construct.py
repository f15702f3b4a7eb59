"""Random decompositions, cardinality augmentation and criterion surveys.

Everything here is deterministic given the seed: sampling goes through
random.Random seeded explicitly, and per-trial seeds are derived with a
fixed integer mix so results do not depend on evaluation order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import Certificate, check_non_redundant
from .geometry import (
    AmbientTensor,
    MultiPoint,
    MultiShape,
    PointSet,
    assemble_tensor,
    cohomology,
    has_different_coordinates,
    segre_matrix,
    segre_vector,
)
from .kruskal import compare_criteria
from .linalg import in_row_span, rat_rank

DEFAULT_BOX = 9
_RESAMPLE_CAP = 512
_FACTOR_DRAWS = 24


class AugmentationError(RuntimeError):
    """Raised when the augmentation retry budget runs out."""

    def __init__(self, message: str, certificate: Certificate | None = None):
        super().__init__(message)
        self.certificate = certificate


def derive_seed(seed: int, index: int) -> int:
    """Stable 64-bit child seed for trial ``index`` (splitmix-style)."""
    x = (seed + 0x9E3779B97F4A7C15 * (index + 1)) % 2**64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) % 2**64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) % 2**64
    return (x ^ (x >> 31)) % 2**64


def _nonzero_int(rng: random.Random, box: int) -> int:
    while True:
        v = rng.randint(-box, box)
        if v:
            return v


def _random_factor(rng: random.Random, size: int, box: int) -> tuple[Fraction, ...]:
    # first coordinate kept nonzero, which also normalizes the vector away from zero
    coords = [Fraction(_nonzero_int(rng, box))]
    coords.extend(Fraction(rng.randint(-box, box)) for _ in range(size - 1))
    return tuple(coords)


def _random_point(shape: MultiShape, rng: random.Random, box: int) -> MultiPoint:
    return MultiPoint(tuple(_random_factor(rng, size, box) for size in shape.sizes))


def random_decomposition(
    shape: MultiShape, r: int, *, box: int = DEFAULT_BOX, seed: int = 0
) -> tuple[PointSet, tuple[Fraction, ...]]:
    """Sample r distinct points with injective factor projections, plus
    nonzero integer weights.  Deterministic for a given seed."""
    if r < 1:
        raise ValueError("need at least one point")
    rng = random.Random(seed)
    for _ in range(_RESAMPLE_CAP):
        points = [_random_point(shape, rng, box) for _ in range(r)]
        if len({p.canonical() for p in points}) != r:
            continue
        s = PointSet(shape, tuple(points))
        if not has_different_coordinates(s):
            continue
        weights = tuple(Fraction(_nonzero_int(rng, box)) for _ in range(r))
        return s, weights
    raise RuntimeError(
        f"could not sample {r} points with injective projections on shape {shape.dims}"
    )


def _distinct_from(candidate: MultiPoint, others: Sequence[MultiPoint]) -> bool:
    return all(candidate != q for q in others)


def _try_augment(a: PointSet, rng: random.Random, box: int) -> PointSet | None:
    """One pass of the augmentation construction; None when sampling fails.

    Walks the factors with positive dimension.  At each one it perturbs
    the working point P in that factor alone; if the perturbed point
    leaves the current span, P splits into two points on the line of the
    perturbation and the new set is returned.  Otherwise the perturbed
    point replaces P (the span is unchanged) and the walk continues.
    """
    shape = a.shape
    current = list(a.points)
    p_idx = 0
    eligible = [i for i in range(1, shape.k + 1) if shape.dims[i - 1] > 0]
    for i in eligible:
        base = segre_matrix(PointSet(shape, tuple(current)))
        pivot = current[p_idx]
        others = current[:p_idx] + current[p_idx + 1:]
        stepped = False
        for _ in range(_FACTOR_DRAWS):
            b = _random_factor(rng, shape.sizes[i - 1], box)
            candidate = pivot.replace_factor(i, b)
            if candidate == pivot or not _distinct_from(candidate, others):
                continue
            if not in_row_span(segre_vector(candidate), base):
                # split: pivot sits on the line between the perturbed factor
                # vector b and c = pivot_i - t * b, so its Segre vector is an
                # exact combination of the two new points
                for _ in range(_FACTOR_DRAWS):
                    t = Fraction(_nonzero_int(rng, box))
                    c = tuple(pc - t * bc for pc, bc in zip(pivot.factors[i - 1], b))
                    if not any(c):
                        continue
                    split = pivot.replace_factor(i, c)
                    if split == candidate or not _distinct_from(split, others):
                        continue
                    return PointSet(shape, tuple(others + [candidate, split]))
                return None
            replacement = current[:p_idx] + [candidate] + current[p_idx + 1:]
            if rat_rank(segre_matrix(PointSet(shape, tuple(replacement)))) == len(replacement):
                current = replacement
                stepped = True
                break
        if not stepped:
            return None
    return None


def augment_decomposition(
    tensor: AmbientTensor,
    a: PointSet,
    weights: Sequence,
    *,
    seed: int = 0,
    box: int = DEFAULT_BOX,
    retries: int = 32,
) -> tuple[PointSet, Certificate]:
    """Extend a non-redundant decomposition by one point.

    Requires #A <= M, independent Segre vectors, at least one factor of
    positive dimension, and tensor = assemble_tensor(weights, A).  The
    result is re-certified with check_non_redundant; when the budget of
    ``retries`` construction passes runs out the last failing certificate
    rides along on the raised AugmentationError.
    """
    shape = a.shape
    if tensor.shape != shape:
        raise ValueError("tensor and point set have different shapes")
    if all(n == 0 for n in shape.dims):
        raise ValueError("augmentation needs a factor of positive dimension")
    if len(a) > shape.ambient_dim:
        raise ValueError(
            f"cannot augment {len(a)} points in ambient dimension {shape.ambient_dim}"
        )
    if cohomology(a).h1 != 0:
        raise ValueError("the Segre vectors of the input points must be independent")
    if assemble_tensor(weights, a) != tensor:
        raise ValueError("tensor does not equal the weighted sum of the decomposition")
    rng = random.Random(seed)
    last: Certificate | None = None
    for _ in range(retries):
        s = _try_augment(a, rng, box)
        if s is None:
            continue
        cert = check_non_redundant(tensor, s)
        if cert.certified:
            return s, cert
        last = cert
    raise AugmentationError(
        f"augmentation failed after {retries} attempts", certificate=last
    )


@dataclass(frozen=True)
class SurveyRow:
    dims: tuple[int, ...]
    r: int
    trials: int
    exact_rank: int
    identifiable: int
    kruskal: int
    flattening_without_kruskal: int

    def as_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "r": self.r,
            "trials": self.trials,
            "certified_exact_rank": self.exact_rank,
            "certified_minimal_or_identifiable": self.identifiable,
            "kruskal_applies": self.kruskal,
            "flattening_without_kruskal": self.flattening_without_kruskal,
        }


@dataclass(frozen=True)
class SurveyReport:
    rows: tuple[SurveyRow, ...]

    def as_json(self) -> dict:
        return {"rows": [row.as_json() for row in self.rows]}


def survey(
    shapes: Sequence[MultiShape],
    r_values: Sequence[int],
    trials: int,
    *,
    seed: int = 0,
    box: int = DEFAULT_BOX,
) -> SurveyReport:
    """Tally which criteria fire on random decompositions per shape and r."""
    rows = []
    counter = 0
    for shape in shapes:
        for r in r_values:
            exact = ident = krusk = advantage = 0
            for _ in range(trials):
                child = derive_seed(seed, counter)
                counter += 1
                s, weights = random_decomposition(shape, r, box=box, seed=child)
                tensor = assemble_tensor(weights, s)
                record = compare_criteria(tensor, s)
                exact += record.exact_rank.certified
                ident += record.identifiability.certified
                krusk += record.kruskal_applies
                advantage += record.flattening_without_kruskal
            rows.append(
                SurveyRow(shape.dims, r, trials, exact, ident, krusk, advantage)
            )
    return SurveyReport(tuple(rows))
