"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive and uses a different algorithm
from the code under test: rank by textbook Gaussian elimination with
Fraction division, Kruskal rank straight from its definition, monomial
orders from sorting exponent vectors, tensor layouts from explicit
stride arithmetic.  The point is to disagree with the package whenever
the package is wrong.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product


def gauss_rank(rows) -> int:
    """Rank by row reduction over Fraction, dividing by pivots."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    height, width = len(m), len(m[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, height) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(height):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == height:
            break
    return rank


def in_span(vector, rows) -> bool:
    base = [list(r) for r in rows]
    return gauss_rank(base + [list(vector)]) == gauss_rank(base)


def kruskal_rank_exhaustive(columns) -> int:
    """Largest kappa such that every kappa columns are independent.

    Checks every subset of every size, in increasing size, exactly as
    the definition reads.
    """
    cols = [list(c) for c in columns]
    kappa = 0
    for size in range(1, len(cols) + 1):
        if all(
            gauss_rank([cols[j] for j in combo]) == size
            for combo in combinations(range(len(cols)), size)
        ):
            kappa = size
        else:
            break
    return kappa


def matrix_of_two_factor_tensor(coords, dims):
    """Reshape flat two-factor tensor coordinates into a matrix.

    The flat layout has the second factor's index varying fastest, so
    entry (i, j) sits at position i * (n2 + 1) + j.
    """
    n1, n2 = dims
    return [
        [coords[i * (n2 + 1) + j] for j in range(n2 + 1)]
        for i in range(n1 + 1)
    ]


def outer_product_flat(vectors):
    """Flat outer product via explicit multi-index stride arithmetic."""
    sizes = [len(v) for v in vectors]
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    total = strides[0] * sizes[0] if sizes else 1
    out = [Fraction(0)] * total
    for multi in product(*[range(s) for s in sizes]):
        value = Fraction(1)
        for v, idx in zip(vectors, multi):
            value *= Fraction(v[idx])
        out[sum(i * s for i, s in zip(multi, strides))] = value
    return out


def permute_flat_coords(coords, sizes, perm):
    """Flat coordinates after reordering the tensor factors.

    ``perm`` lists, for each new factor position, the old 1-based factor
    index.  Both layouts put the last factor's index fastest.
    """
    k = len(sizes)
    old_strides = [1] * k
    for i in range(k - 2, -1, -1):
        old_strides[i] = old_strides[i + 1] * sizes[i + 1]
    new_sizes = [sizes[p - 1] for p in perm]
    out = []
    for multi in product(*[range(s) for s in new_sizes]):
        old_multi = [0] * k
        for new_pos, old_factor in enumerate(perm):
            old_multi[old_factor - 1] = multi[new_pos]
        out.append(coords[sum(i * s for i, s in zip(old_multi, old_strides))])
    return out


def exponents_desc_lex(n: int, degree: int):
    """Degree-``degree`` exponent vectors in n + 1 variables, sorted
    descending lexicographically."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, n + 1)
    return out


def monomial_values(point, exponents):
    coords = [Fraction(x) for x in point]
    out = []
    for exp in exponents:
        value = Fraction(1)
        for c, e in zip(coords, exp):
            value *= c ** e
        out.append(value)
    return out


def rescaled_point_set(s, rng, box: int = 7):
    """The same projective points with fresh nonzero scalings per factor."""
    from tensorcert import MultiPoint, PointSet

    points = []
    for p in s.points:
        factors = []
        for f in p.factors:
            scale = Fraction(0)
            while scale == 0:
                scale = Fraction(rng.randint(-box, box), rng.randint(1, box))
            factors.append(tuple(scale * x for x in f))
        points.append(MultiPoint(tuple(factors)))
    return PointSet(s.shape, tuple(points))


def permuted_point_set(s, perm):
    """The point set with factors reordered by ``perm`` (old 1-based indices)."""
    from tensorcert import MultiPoint, MultiShape, PointSet

    shape = MultiShape(tuple(s.shape.dims[p - 1] for p in perm))
    points = [
        MultiPoint(tuple(p.factors[q - 1] for q in perm)) for p in s.points
    ]
    return PointSet(shape, tuple(points))
