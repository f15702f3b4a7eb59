"""Exact linear algebra against a textbook Gaussian elimination oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import gauss_rank
from tensorcert.linalg import (
    RatMatrix,
    format_rational,
    in_row_span,
    parse_rational,
    rat_rank,
    solve_row_combination,
    span_intersection_dim,
)

rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=7
)


def small_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda w: st.lists(
            st.lists(rationals, min_size=w, max_size=w), min_size=1, max_size=max_rows
        )
    )


# -- rational literals


def test_parse_rational_integers_and_fractions():
    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-7/2") == Fraction(-7, 2)
    assert parse_rational("+4/6") == Fraction(2, 3)
    assert parse_rational("0") == Fraction(0)
    assert parse_rational("  12/5 ") == Fraction(12, 5)


@pytest.mark.parametrize(
    "bad", ["1.5", "a", "2 / 3", "1/-2", "--3", "", "1/0", "0/0"]
)
def test_parse_rational_rejects_malformed_literals(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_rejects_non_strings():
    with pytest.raises(ValueError):
        parse_rational(3)


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-7, 2)) == "-7/2"
    assert format_rational(5) == "5"
    assert format_rational(Fraction(4, 6)) == "2/3"


@given(rationals)
def test_format_parse_round_trip(x):
    assert parse_rational(format_rational(x)) == x


# -- matrix container


def test_from_rows_rejects_ragged_rows():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])


def test_from_rows_explicit_column_count_must_agree():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2]], cols=3)


def test_empty_matrix_needs_explicit_columns():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([])
    m = RatMatrix.from_rows([], cols=4)
    assert m.rows == 0 and m.cols == 4
    assert rat_rank(m) == 0


def test_row_and_column_access():
    m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.row(1) == (4, 5, 6)
    assert m.column(2) == (3, 6)
    assert m.row_list() == [(1, 2, 3), (4, 5, 6)]


def test_transpose_is_an_involution():
    m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.transpose().transpose() == m
    assert m.transpose().row(0) == (1, 4)


def test_with_row_and_stack():
    m = RatMatrix.from_rows([[1, 0]])
    assert m.with_row([0, 1]).rows == 2
    with pytest.raises(ValueError):
        m.with_row([1, 2, 3])
    stacked = m.stack(RatMatrix.from_rows([[2, 2], [3, 3]]))
    assert stacked.rows == 3
    with pytest.raises(ValueError):
        m.stack(RatMatrix.from_rows([[1, 2, 3]]))


def test_take_columns_returns_picked_columns_as_rows():
    m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    picked = m.take_columns([2, 0])
    assert picked.row_list() == [(3, 6), (1, 4)]


# -- rank


def test_rank_hand_cases():
    assert rat_rank(RatMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rat_rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rat_rank(RatMatrix.from_rows([[0, 0], [0, 0]])) == 0
    assert rat_rank(RatMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 2


def test_rank_with_fractional_entries():
    m = RatMatrix.from_rows(
        [
            [Fraction(1, 2), Fraction(1, 3)],
            [Fraction(3, 2), Fraction(5, 1)],
            [Fraction(1, 4), Fraction(1, 6)],
        ]
    )
    assert rat_rank(m) == gauss_rank(m.row_list()) == 2


@settings(max_examples=80, deadline=None)
@given(small_matrices())
def test_rank_matches_gaussian_oracle(rows):
    m = RatMatrix.from_rows(rows)
    assert rat_rank(m) == gauss_rank(rows)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_is_transpose_invariant(rows):
    m = RatMatrix.from_rows(rows)
    assert rat_rank(m) == rat_rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(small_matrices(), st.integers(-9, 9).filter(bool))
def test_rank_is_invariant_under_row_scaling(rows, scale):
    scaled = [[scale * Fraction(x) for x in rows[0]]] + rows[1:]
    assert rat_rank(RatMatrix.from_rows(scaled)) == rat_rank(RatMatrix.from_rows(rows))


# -- span tests


def test_in_row_span_hand_cases():
    base = RatMatrix.from_rows([[1, 0, 0], [0, 1, 0]])
    assert in_row_span((2, -3, 0), base)
    assert not in_row_span((0, 0, 1), base)
    with pytest.raises(ValueError):
        in_row_span((1, 0), base)


def test_span_intersection_dim_hand_cases():
    a = RatMatrix.from_rows([[1, 0, 0], [0, 1, 0]])
    b = RatMatrix.from_rows([[0, 1, 0], [0, 0, 1]])
    # the intersection is the single projective point e2
    assert span_intersection_dim(a, b) == 0
    c = RatMatrix.from_rows([[1, 0, 0, 0]])
    d = RatMatrix.from_rows([[0, 1, 0, 0]])
    assert span_intersection_dim(c, d) == -1
    assert span_intersection_dim(a, a) == 1
    with pytest.raises(ValueError):
        span_intersection_dim(a, c)


def test_solve_row_combination_recovers_coefficients():
    base = RatMatrix.from_rows([[1, 0, 2], [0, 1, 1]])
    target = (2, -1, 3)
    coeffs = solve_row_combination(target, base)
    assert coeffs == (2, -1)


def test_solve_row_combination_inconsistent_returns_none():
    base = RatMatrix.from_rows([[1, 0, 0]])
    assert solve_row_combination((0, 1, 0), base) is None


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda w: st.tuples(
            st.lists(st.lists(rationals, min_size=w, max_size=w), min_size=1, max_size=4),
            st.lists(rationals, min_size=4, max_size=4),
        )
    )
)
def test_solve_row_combination_recombines_to_the_target(data):
    rows, raw_coeffs = data
    coeffs = raw_coeffs[: len(rows)]
    base = RatMatrix.from_rows(rows)
    target = [
        sum(c * x for c, x in zip(coeffs, col))
        for col in zip(*rows)
    ]
    solved = solve_row_combination(target, base)
    assert solved is not None
    rebuilt = [
        sum(c * x for c, x in zip(solved, col))
        for col in zip(*rows)
    ]
    assert rebuilt == target


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_bounded_by_dimensions(rows):
    m = RatMatrix.from_rows(rows)
    assert 0 <= rat_rank(m) <= min(m.rows, m.cols)
