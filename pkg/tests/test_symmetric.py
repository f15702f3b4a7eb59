"""Veronese evaluation, symmetric rank certificates and generic bounds."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import exponents_desc_lex, gauss_rank, monomial_values
from tensorcert.certify import FAIL, PASS
from tensorcert.geometry import MultiPoint, MultiShape, PointSet, flattening_rank
from tensorcert.linalg import rat_rank
from tensorcert.symmetric import (
    SymPointSet,
    SymShape,
    assemble_symmetric,
    comon_certify,
    generic_symmetric_rank,
    is_exceptional,
    symmetric_bounds,
    veronese_matrix,
    veronese_vector,
)


def sym_points(*pts):
    return SymPointSet(tuple(tuple(Fraction(x) for x in p) for p in pts))


def random_sym_points(n, count, seed, box=9):
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        cand = (Fraction(rng.randint(1, box)),) + tuple(
            Fraction(rng.randint(-box, box)) for _ in range(n)
        )
        pivot = next(x for x in cand if x)
        canon = tuple(x / pivot for x in cand)
        if all(
            canon != tuple(x / next(y for y in p if y) for x in p) for p in points
        ):
            points.append(cand)
    return SymPointSet(tuple(points))


# -- shapes and point sets


def test_sym_shape_counts():
    shape = SymShape(2, 6)
    assert shape.num_coords == 28
    assert shape.half_degree == 3
    with pytest.raises(ValueError):
        SymShape(-1, 2)
    with pytest.raises(ValueError):
        SymShape(1, 0)


def test_sym_point_set_validation():
    with pytest.raises(ValueError):
        SymPointSet(())
    with pytest.raises(ValueError):
        sym_points((1, 0), (0, 0))
    with pytest.raises(ValueError, match="duplicate"):
        sym_points((1, 2), (2, 4))
    with pytest.raises(ValueError):
        sym_points((1, 0), (0, 1, 1))
    s = sym_points((1, 0), (0, 1))
    assert s.n == 1 and len(s) == 2


# -- Veronese vectors


def test_veronese_vector_binary_cubics():
    assert veronese_vector((1, 0), 3) == (1, 0, 0, 0)
    assert veronese_vector((1, 1), 3) == (1, 1, 1, 1)
    assert veronese_vector((1, 2), 3) == (1, 2, 4, 8)


def test_veronese_vector_ternary_quadrics_order():
    # graded lex on exponents: x2, xy, xz, y2, yz, z2
    assert veronese_vector((1, 2, 3), 2) == (1, 2, 3, 4, 6, 9)


def test_veronese_vector_degree_zero_and_errors():
    assert veronese_vector((5, 7), 0) == (1,)
    with pytest.raises(ValueError):
        veronese_vector((1, 2), -1)
    with pytest.raises(ValueError):
        veronese_vector((), 2)


@settings(max_examples=50, deadline=None)
@given(
    st.integers(0, 3),
    st.integers(1, 4),
    st.integers(0, 10_000),
)
def test_veronese_vector_matches_the_monomial_oracle(n, degree, seed):
    rng = random.Random(seed)
    point = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n + 1)]
    exponents = exponents_desc_lex(n, degree)
    assert list(veronese_vector(point, degree)) == monomial_values(point, exponents)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 2), st.integers(2, 3), st.integers(0, 10_000))
def test_veronese_rank_agrees_with_the_diagonal_segre_rank(n, degree, seed):
    # the degree-k Veronese row and the Segre row of the k-fold repeated
    # point list the same monomial values, with multiplicities as the
    # only difference, so evaluation ranks agree
    pts = random_sym_points(n, 3, seed)
    shape = MultiShape((n,) * degree)
    diag = PointSet(
        shape, tuple(MultiPoint((p,) * degree) for p in pts.points)
    )
    assert rat_rank(veronese_matrix(pts, degree)) == flattening_rank(diag)


# -- assembling symmetric tensors


def test_assemble_symmetric_weighted_monomials():
    pts = sym_points((1, 0), (0, 1))
    assert assemble_symmetric((2, 3), pts, 2) == (2, 0, 3)


def test_assemble_symmetric_rejects_bad_weights_and_vanishing_sums():
    pts = sym_points((1, 0), (0, 1))
    with pytest.raises(ValueError):
        assemble_symmetric((1,), pts, 2)
    with pytest.raises(ValueError):
        assemble_symmetric((0, 1), pts, 2)
    three = sym_points((1, 0), (0, 1), (1, 1))
    with pytest.raises(ValueError, match="vanishes"):
        assemble_symmetric((1, 1, -1), three, 1)


# -- the rank agreement certificate


def test_comon_certify_ten_generic_plane_points_degree_six():
    pts = random_sym_points(2, 10, seed=41)
    coords = assemble_symmetric([1] * 10, pts, 6)
    cert = comon_certify(coords, pts, 6)
    assert cert.certified
    assert cert.conclusion == {
        "rank": 10,
        "cactus_rank": 10,
        "symmetric_rank": 10,
        "ranks_agree": True,
        "vanishing_degree": 3,
    }
    interp = cert.find("half_degree_interpolation")[0]
    assert interp.status == PASS
    assert interp.witness["attempts"] == [{"e": 3, "rank": 10, "h1": 0}]


def test_comon_certify_singleton():
    pts = sym_points((1, 2))
    coords = assemble_symmetric((3,), pts, 4)
    cert = comon_certify(coords, pts, 4)
    assert cert.certified
    assert cert.conclusion["rank"] == 1
    assert cert.conclusion["vanishing_degree"] == 2


def test_comon_certify_collinear_points_fail_interpolation():
    # four points on the line z = 0 span only the rank-3 Vandermonde
    # column space at every degree, so no e below the half degree works
    pts = sym_points((1, 0, 0), (1, 1, 0), (1, 2, 0), (1, 3, 0))
    rows = [veronese_vector(p, 2) for p in pts.points]
    assert gauss_rank(rows) == 3
    coords = assemble_symmetric((1, 1, 1, 1), pts, 4)
    cert = comon_certify(coords, pts, 4)
    assert not cert.certified
    interp = cert.find("half_degree_interpolation")[0]
    assert interp.status == FAIL
    assert [a["e"] for a in interp.witness["attempts"]] == [2, 1, 0]
    assert interp.witness["chosen_e"] is None


def test_comon_certify_rejects_mismatched_coordinates():
    pts = sym_points((1, 0), (0, 1))
    with pytest.raises(ValueError, match="expected 5"):
        comon_certify((1, 2, 3), pts, 4)
    with pytest.raises(ValueError, match="zero tensor"):
        comon_certify((0, 0, 0, 0, 0), pts, 4)


def test_comon_certify_fails_when_the_tensor_is_outside_the_span():
    pts = sym_points((1, 0), (0, 1))
    outside = veronese_vector((1, 1), 4)
    cert = comon_certify(outside, pts, 4)
    assert not cert.certified
    assert cert.find("tensor_in_span")[0].status == FAIL


def test_comon_certify_detects_redundant_presentations():
    pts = sym_points((1, 0), (0, 1), (1, 1))
    coords = assemble_symmetric((1, 1), sym_points((1, 0), (0, 1)), 4)
    cert = comon_certify(coords, pts, 4)
    assert not cert.certified
    failing = [h for h in cert.hypotheses if h.status == FAIL]
    assert failing
    assert failing[0].name == "tensor_outside_span_of_proper_subset"


# -- bounds


def test_symmetric_bounds_frozen_values():
    assert symmetric_bounds(2, 6) == (10, 10, False)
    assert symmetric_bounds(2, 8) == (15, 15, False)
    assert symmetric_bounds(3, 4) == (10, 9, True)
    assert symmetric_bounds(1, 5) == (4, 3, False)
    assert symmetric_bounds(2, 2) == (3, 2, True)


def test_exceptional_list():
    assert is_exceptional(2, 2)
    assert is_exceptional(5, 2)
    assert not is_exceptional(1, 2)
    assert is_exceptional(2, 4)
    assert is_exceptional(3, 4)
    assert is_exceptional(4, 4)
    assert is_exceptional(4, 3)
    assert not is_exceptional(2, 3)
    assert not is_exceptional(5, 4)


def test_generic_symmetric_rank_classical_values():
    assert generic_symmetric_rank(1, 2) == 2
    assert generic_symmetric_rank(1, 5) == 3
    assert generic_symmetric_rank(2, 2) == 3
    assert generic_symmetric_rank(2, 4) == 6
    assert generic_symmetric_rank(3, 4) == 10
    assert generic_symmetric_rank(4, 3) == 8
    assert generic_symmetric_rank(2, 6) == 10


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 4), st.integers(1, 9))
def test_bounds_are_internally_consistent(n, k):
    bounds = symmetric_bounds(n, k)
    assert 1 <= bounds.r0
    assert bounds.rg >= 1
    assert generic_symmetric_rank(n, k) >= bounds.rg
    # odd degrees certify one point beyond the half-degree interpolation cap
    from math import comb

    e = k // 2
    assert bounds.r0 == comb(n + e, e) + (k % 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(2, 6))
def test_r0_is_monotone_in_the_degree(n, k):
    assert symmetric_bounds(n, k + 2).r0 >= symmetric_bounds(n, k).r0
