"""Certificates for rank bounds, exact rank, identifiability and pinning.

Every public operation returns a Certificate: a claim, a list of named
hypotheses that were actually checked (or, where the caller must supply
a geometric assumption, explicitly marked ASSERTED), and a conclusion
that is present only when the checked hypotheses hold.  Witnesses are
plain JSON-friendly values (ranks, indices, bounds) so certificates can
be serialized and compared; they never echo coordinates, which keeps
them invariant under rescaling of the input representatives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .geometry import (
    AmbientTensor,
    FactorPartition,
    PointSet,
    all_partitions,
    cohomology,
    different_coordinates_violation,
    factor_projection_sizes,
    factor_subset,
    flattening_rank,
    segre_matrix,
    segre_vector,
)
from .linalg import RatMatrix, rat_rank

PASS = "PASS"
FAIL = "FAIL"
ASSERTED = "ASSERTED"

CLAIM_NON_REDUNDANT = "NonRedundant"
CLAIM_CACTUS_BOUND = "CactusRankLowerBound"
CLAIM_EXACT_RANK = "ExactRank"
CLAIM_MINIMAL_RANK = "MinimalRank"
CLAIM_IDENTIFIABLE = "Identifiable"
CLAIM_OBSTRUCTION = "DifferentCoordinatesObstruction"
CLAIM_PINNING = "ProjectionPinning"
CLAIM_SPAN_IDENTITY = "SpanIntersectionIdentity"

TAG_NON_REDUNDANT = "span-membership-non-redundancy"
TAG_CACTUS_BOUND = "flattening-cactus-lower-bound"
TAG_EXACT_RANK = "double-flattening-exact-rank"
TAG_IDENTIFIABILITY = "small-cardinality-identifiability"
TAG_SPAN_IDENTITY = "span-intersection-identity"
TAG_OBSTRUCTION = "projection-coordinate-obstruction"
TAG_PINNING = "projection-pinning"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def satisfied(self) -> bool:
        return self.status in (PASS, ASSERTED)


@dataclass(frozen=True)
class Certificate:
    claim: str
    theorem_ref: str
    hypotheses: tuple[Hypothesis, ...]
    conclusion: dict | None

    @property
    def certified(self) -> bool:
        return self.conclusion is not None

    def failed(self) -> list[str]:
        return [h.name for h in self.hypotheses if not h.satisfied]

    def find(self, name: str) -> list[Hypothesis]:
        return [h for h in self.hypotheses if h.name == name]


def _require_matching(tensor: AmbientTensor, s: PointSet) -> None:
    if tensor.shape != s.shape:
        raise ValueError("tensor and point set have different shapes")


def non_redundancy_hypotheses(
    coords: tuple, rows: list[tuple], label: str = "point"
) -> tuple[list[Hypothesis], bool]:
    """Shared span checks behind non-redundancy, over any evaluation rows.

    Checks that the rows are independent, that ``coords`` lies in their
    span, and that it leaves the span when any single row is removed.
    """
    width = len(coords)
    r = len(rows)
    full = RatMatrix.from_rows(rows, cols=width)
    rank = rat_rank(full)
    hyps = [
        Hypothesis(
            "evaluation_vectors_independent",
            PASS if rank == r else FAIL,
            {"rank": rank, "cardinality": r},
        )
    ]
    if rank != r:
        return hyps, False
    rank_with_t = rat_rank(full.with_row(coords))
    in_span = rank_with_t == rank
    hyps.append(
        Hypothesis(
            "tensor_in_span",
            PASS if in_span else FAIL,
            {"span_rank": rank, "rank_with_tensor": rank_with_t},
        )
    )
    if not in_span:
        return hyps, False
    ok = True
    for j in range(r):
        reduced = RatMatrix.from_rows(rows[:j] + rows[j + 1:], cols=width)
        # the rows are independent here, so the reduced rank is r - 1 and
        # membership is a single extra rank computation
        inside = rat_rank(reduced.with_row(coords)) == r - 1
        hyps.append(
            Hypothesis(
                "tensor_outside_span_of_proper_subset",
                FAIL if inside else PASS,
                {f"{label}_removed": j},
            )
        )
        if inside:
            ok = False
    return hyps, ok


@lru_cache(maxsize=4096)
def check_non_redundant(tensor: AmbientTensor, s: PointSet) -> Certificate:
    """Certify that S decomposes the tensor and no proper subset does."""
    _require_matching(tensor, s)
    rows = [segre_vector(p) for p in s.points]
    hyps, ok = non_redundancy_hypotheses(tensor.coords, rows)
    conclusion = {"cardinality": len(s)} if ok else None
    return Certificate(CLAIM_NON_REDUNDANT, TAG_NON_REDUNDANT, tuple(hyps), conclusion)


ASSUMED_NOTE = "assumed, certify separately with check_non_redundant"


@dataclass(frozen=True)
class PartitionEntry:
    partition: FactorPartition
    applicable: bool
    bound: int | None
    reason: str | None

    def as_json(self) -> dict:
        return {
            "partition": self.partition.as_json(),
            "applicable": self.applicable,
            "bound": self.bound,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class BoundReport:
    """Cactus-rank lower bounds from every inspected bipartition."""

    best_bound: int
    best_partition: FactorPartition | None
    per_partition: tuple[PartitionEntry, ...]
    certificate: Certificate

    def as_json(self) -> dict:
        from .cli import certificate_to_json  # local import, no cycle at module load

        return {
            "best_bound": self.best_bound,
            "best_partition": self.best_partition.as_json() if self.best_partition else None,
            "per_partition": [e.as_json() for e in self.per_partition],
            "certificate": certificate_to_json(self.certificate),
        }


def bound_cactus_rank(s: PointSet, partition: FactorPartition | None = None) -> BoundReport:
    """Best lower bound on the cactus rank over bipartitions of the factors.

    A bipartition (E, F) yields the bound M_F - h0(S, F) provided the
    E-flattening of S has h1 = 0 and the bound exceeds 1.  The report
    assumes, and records as an assumption, that S decomposes the target
    tensor non-redundantly.
    """
    k = s.shape.k
    candidates = [partition] if partition is not None else all_partitions(k)
    entries = []
    best: PartitionEntry | None = None
    for part in candidates:
        if part.k != k:
            raise ValueError(f"partition {part} does not match k={k}")
        h1_e = cohomology(s, part.E).h1
        if h1_e != 0:
            entries.append(PartitionEntry(part, False, None, "h1 of the E-flattening is nonzero"))
            continue
        m_f = s.shape.segre_length(part.F)
        bound = m_f - cohomology(s, part.F).h0
        if bound <= 1:
            entries.append(PartitionEntry(part, False, bound, "bound does not exceed the trivial 1"))
            continue
        entry = PartitionEntry(part, True, bound, None)
        entries.append(entry)
        if best is None or bound > best.bound:
            best = entry
    best_bound = best.bound if best else 1
    hyps = [Hypothesis("non_redundant_decomposition", ASSERTED, {"note": ASSUMED_NOTE})]
    if best:
        hyps.append(
            Hypothesis(
                "e_flattening_independent",
                PASS,
                {"partition": best.partition.as_json(), "h1_E": 0},
            )
        )
        conclusion = {
            "cactus_rank_at_least": best.bound,
            "rank_at_least": best.bound,
            "partition": best.partition.as_json(),
        }
    else:
        hyps.append(
            Hypothesis(
                "e_flattening_independent",
                FAIL,
                {"note": "no inspected partition was applicable"},
            )
        )
        conclusion = None
    cert = Certificate(CLAIM_CACTUS_BOUND, TAG_CACTUS_BOUND, tuple(hyps), conclusion)
    return BoundReport(best_bound, best.partition if best else None, tuple(entries), cert)


def certify_exact_rank(
    tensor: AmbientTensor, s: PointSet, partition: FactorPartition | None = None
) -> Certificate:
    """Certify rank = cactus rank = #S via a bipartition with h1 = 0 on
    both flattenings, on top of a non-redundancy certificate."""
    _require_matching(tensor, s)
    nr = check_non_redundant(tensor, s)
    hyps = list(nr.hypotheses)
    if not nr.certified:
        return Certificate(CLAIM_EXACT_RANK, TAG_EXACT_RANK, tuple(hyps), None)
    k = s.shape.k
    candidates = [partition] if partition is not None else all_partitions(k)
    attempts = []
    found: FactorPartition | None = None
    for part in candidates:
        if part.k != k:
            raise ValueError(f"partition {part} does not match k={k}")
        h1_e = cohomology(s, part.E).h1
        h1_f = cohomology(s, part.F).h1
        attempts.append({"partition": part.as_json(), "h1_E": h1_e, "h1_F": h1_f})
        if h1_e == 0 and h1_f == 0:
            found = part
            break
    hyps.append(
        Hypothesis(
            "partition_with_both_flattenings_independent",
            PASS if found else FAIL,
            {"attempts": attempts},
        )
    )
    if not found:
        return Certificate(CLAIM_EXACT_RANK, TAG_EXACT_RANK, tuple(hyps), None)
    r = len(s)
    conclusion = {"rank": r, "cactus_rank": r, "partition": found.as_json()}
    return Certificate(CLAIM_EXACT_RANK, TAG_EXACT_RANK, tuple(hyps), conclusion)


def certify_identifiability(tensor: AmbientTensor, s: PointSet) -> Certificate:
    """Certify minimality, and uniqueness when stronger, of a small
    non-redundant decomposition.

    Beyond non-redundancy, the hypotheses are that every factor
    projection is either constant on S or injective on S, and that with
    k' the number of non-constant factors, 2r <= k' + 2 (minimality) or
    2r <= k' + 1 (uniqueness).  Constant factors split off a fixed
    vector of the tensor and contribute nothing, so the count uses only
    the factors where S actually moves.  A singleton is certified
    directly: the Segre embedding is injective, so a rank-one tensor has
    exactly one rank-one decomposition.

    The numeric range is deliberately tighter than 2r <= k + max(n_i):
    with that range a set of three points on (P^1)^5, two of them
    sharing all factors but the last, is non-redundant and non-degenerate
    with 2r = k + max(n_i), yet the two sharing points merge into a
    single rank-one term, so the decomposition is not minimal.  The
    injective-or-constant hypothesis plus the k'-range excludes every
    such collapse: any shorter or different decomposition would create a
    minimally dependent set of at most k'+1 points in the union, forcing
    two points of S to share a coordinate.
    """
    _require_matching(tensor, s)
    nr = check_non_redundant(tensor, s)
    hyps = list(nr.hypotheses)
    if not nr.certified:
        return Certificate(CLAIM_MINIMAL_RANK, TAG_IDENTIFIABILITY, tuple(hyps), None)
    r = len(s)
    if r == 1:
        hyps.append(Hypothesis("singleton_decomposition", PASS, {"cardinality": 1}))
        conclusion = {"rank": 1, "minimal": True, "identifiable": True}
        return Certificate(CLAIM_IDENTIFIABLE, TAG_IDENTIFIABILITY, tuple(hyps), conclusion)
    sizes = factor_projection_sizes(s)
    constant = [i for i, c in enumerate(sizes, start=1) if c == 1]
    mixed = [i for i, c in enumerate(sizes, start=1) if 1 < c < r]
    k_eff = sum(1 for c in sizes if c > 1)
    hyps.append(
        Hypothesis(
            "factor_projections_injective_or_constant",
            PASS if not mixed else FAIL,
            {
                "projection_sizes": list(sizes),
                "constant_factors": constant,
                "violating_factors": mixed,
                "k_effective": k_eff,
            },
        )
    )
    if mixed:
        return Certificate(CLAIM_MINIMAL_RANK, TAG_IDENTIFIABILITY, tuple(hyps), None)
    minimal = 2 * r <= k_eff + 2
    identifiable = 2 * r <= k_eff + 1
    hyps.append(
        Hypothesis(
            "cardinality_within_range",
            PASS if minimal else FAIL,
            {
                "two_r": 2 * r,
                "k_effective": k_eff,
                "minimal_when_at_most": k_eff + 2,
                "identifiable_when_at_most": k_eff + 1,
            },
        )
    )
    if not minimal:
        return Certificate(CLAIM_MINIMAL_RANK, TAG_IDENTIFIABILITY, tuple(hyps), None)
    conclusion = {"rank": r, "minimal": True, "identifiable": identifiable}
    claim = CLAIM_IDENTIFIABLE if identifiable else CLAIM_MINIMAL_RANK
    return Certificate(claim, TAG_IDENTIFIABILITY, tuple(hyps), conclusion)


def check_span_intersection_identity(a: PointSet, b: PointSet) -> Certificate:
    """Verify, for independent point sets of a common shape, that the
    projective dimension of the intersection of their Segre spans equals
    dim of the span of the common points plus h1 of the union."""
    if a.shape != b.shape:
        raise ValueError("the two point sets have different shapes")
    hyps = []
    ok = True
    for name, ps in (("first_set_independent", a), ("second_set_independent", b)):
        h1 = cohomology(ps).h1
        hyps.append(Hypothesis(name, PASS if h1 == 0 else FAIL, {"cardinality": len(ps), "h1": h1}))
        ok = ok and h1 == 0
    if not ok:
        return Certificate(CLAIM_SPAN_IDENTITY, TAG_SPAN_IDENTITY, tuple(hyps), None)
    lhs = _span_intersection(a, b)
    common = [p for p in a.points if p in set(b.points)]
    if common:
        common_dim = rat_rank(RatMatrix.from_rows([segre_vector(p) for p in common])) - 1
    else:
        common_dim = -1
    union_points = list(a.points)
    union_points.extend(p for p in b.points if p not in set(a.points))
    union = PointSet(a.shape, tuple(union_points))
    h1_union = cohomology(union).h1
    rhs = common_dim + h1_union
    hyps.append(
        Hypothesis(
            "identity_holds",
            PASS if lhs == rhs else FAIL,
            {
                "lhs_intersection_dim": lhs,
                "common_points": len(common),
                "common_span_dim": common_dim,
                "h1_union": h1_union,
                "rhs": rhs,
            },
        )
    )
    conclusion = {"intersection_dim": lhs, "rhs": rhs} if lhs == rhs else None
    return Certificate(CLAIM_SPAN_IDENTITY, TAG_SPAN_IDENTITY, tuple(hyps), conclusion)


def _span_intersection(a: PointSet, b: PointSet) -> int:
    from .linalg import span_intersection_dim

    return span_intersection_dim(segre_matrix(a), segre_matrix(b))


def obstruct_alt_decompositions(s: PointSet, x: int) -> Certificate:
    """Certify that no other non-redundant decomposition of cardinality
    at most ``x`` can have injective factor projections.

    Requires 0 < x < k.  The certificate assumes S non-redundantly
    decomposes the target tensor; hypotheses checked here are injective
    projections of S, the capacity condition (min size)^(k-x) >= #S, and
    h1 = 0 on every flattening by a factor subset of size k - x.
    """
    k = s.shape.k
    if not 0 < x < k:
        raise ValueError(f"x must satisfy 0 < x < k, got x={x} with k={k}")
    r = len(s)
    hyps = [Hypothesis("non_redundant_decomposition", ASSERTED, {"note": ASSUMED_NOTE})]
    violation = different_coordinates_violation(s)
    hyps.append(
        Hypothesis(
            "different_coordinates",
            PASS if violation is None else FAIL,
            {}
            if violation is None
            else {"factor": violation[0], "points": [violation[1], violation[2]]},
        )
    )
    m_small = s.shape.min_dim
    capacity = (m_small + 1) ** (k - x)
    hyps.append(
        Hypothesis(
            "projection_capacity",
            PASS if capacity >= r else FAIL,
            {"capacity": capacity, "cardinality": r, "min_dim": m_small, "exponent": k - x},
        )
    )
    subset_checks = []
    all_zero = True
    for members in combinations(range(1, k + 1), k - x):
        h1 = cohomology(s, members).h1
        subset_checks.append({"subset": list(members), "h1": h1})
        if h1 != 0:
            all_zero = False
    hyps.append(
        Hypothesis(
            "independent_conditions_on_all_subsets",
            PASS if all_zero else FAIL,
            {"subset_size": k - x, "checks": subset_checks},
        )
    )
    certified = violation is None and capacity >= r and all_zero
    conclusion = (
        {
            "cardinality": r,
            "alternative_max_cardinality": x,
            "statement": (
                "every other non-redundant decomposition of the same tensor with at most "
                f"{x} points has some non-injective factor projection"
            ),
        }
        if certified
        else None
    )
    return Certificate(CLAIM_OBSTRUCTION, TAG_OBSTRUCTION, tuple(hyps), conclusion)


def pin_projections(
    tensor: AmbientTensor,
    s: PointSet,
    families,
    quasi_general_asserted=False,
) -> Certificate:
    """Pin factor projections of any other small decomposition of the tensor.

    ``families`` gives, for each factor i, a proper subset F_i containing
    i; E_i is its complement.  A family is usable when r < M_{F_i},
    r <= M_{E_i}, both flattenings of S have full rank r, and the caller
    asserts that the F_i-projection of S is quasi-general.  The
    quasi-generality flag is never verified here and is recorded as
    ASSERTED.  For every usable family, any other decomposition of the
    tensor with at most r points has exactly r points and the same
    F_i-projection as S, hence the same factor-j projections for j in
    F_i.  Equality of the decompositions themselves is not implied.
    """
    _require_matching(tensor, s)
    k = s.shape.k
    fams = [factor_subset(f, k) for f in families]
    if len(fams) != k:
        raise ValueError(f"expected one family per factor ({k}), got {len(fams)}")
    for i, fam in enumerate(fams, start=1):
        if i not in fam:
            raise ValueError(f"family {i} must contain factor {i}")
        if len(fam) == k:
            raise ValueError(f"family {i} must be a proper subset of the factors")
    if isinstance(quasi_general_asserted, bool):
        flags = [quasi_general_asserted] * k
    else:
        flags = [bool(f) for f in quasi_general_asserted]
        if len(flags) != k:
            raise ValueError("one quasi-generality flag per family required")
    nr = check_non_redundant(tensor, s)
    hyps = list(nr.hypotheses)
    r = len(s)
    pinned: set[int] = set()
    usable = []
    for i in range(1, k + 1):
        fam = fams[i - 1]
        comp = tuple(j for j in range(1, k + 1) if j not in fam)
        m_f = s.shape.segre_length(fam)
        m_e = s.shape.segre_length(comp)
        rank_f = flattening_rank(s, fam)
        rank_e = flattening_rank(s, comp)
        numeric_ok = r < m_f and r <= m_e
        ranks_ok = rank_f == r and rank_e == r
        hyps.append(
            Hypothesis(
                "family_projection_conditions",
                PASS if numeric_ok and ranks_ok else FAIL,
                {
                    "family": list(fam),
                    "complement": list(comp),
                    "cardinality": r,
                    "M_F": m_f,
                    "M_E": m_e,
                    "rank_F": rank_f,
                    "rank_E": rank_e,
                },
            )
        )
        asserted = flags[i - 1]
        hyps.append(
            Hypothesis(
                "quasi-general",
                ASSERTED if asserted else FAIL,
                {"family_index": i, "family": list(fam), "asserted": asserted},
            )
        )
        if numeric_ok and ranks_ok and asserted:
            usable.append(i)
            pinned.update(fam)
    certified = nr.certified and bool(usable)
    conclusion = (
        {
            "cardinality": r,
            "usable_families": usable,
            "pinned_factors": sorted(pinned),
            "statement": (
                "every other decomposition of the tensor with at most "
                f"{r} points has exactly {r} points and the same projections "
                f"on factors {sorted(pinned)}"
            ),
            "caveat": "equal projections do not force the decompositions to coincide",
        }
        if certified
        else None
    )
    return Certificate(CLAIM_PINNING, TAG_PINNING, tuple(hyps), conclusion)
