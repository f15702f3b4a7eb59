"""Exact linear algebra over the rationals.

Everything in this package that certifies anything reduces to ranks of
matrices with Fraction entries.  Ranks are computed by fraction-free
elimination on gcd-reduced integer rows, so results are exact and
deterministic: the pivot is always the first nonzero entry scanning
columns left to right and rows top to bottom.  There is no floating
point anywhere in the certification path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

_RATIONAL_RE = re.compile(r"^[+-]?[0-9]+(/[0-9]+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal of the form ``p`` or ``p/q``.

    The sign, if any, sits on the numerator.  Anything else (floats,
    whitespace inside the number, a zero denominator) is rejected.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational literal must be a string, got {type(text).__name__}")
    body = text.strip()
    if not _RATIONAL_RE.match(body):
        raise ValueError(f"invalid rational literal {text!r} (expected 'p' or 'p/q')")
    try:
        return Fraction(body)
    except ZeroDivisionError:
        raise ValueError(f"invalid rational literal {text!r} (zero denominator)") from None


def format_rational(value: Fraction | int) -> str:
    """Format a rational as ``p`` or ``p/q`` with the sign on the numerator."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _fraction_row(row: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in row)


@dataclass(frozen=True)
class RatMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable], cols: int | None = None) -> "RatMatrix":
        data = [_fraction_row(r) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("an empty matrix needs an explicit column count")
        else:
            width = cols
        if cols is not None and cols != width:
            raise ValueError("explicit column count disagrees with the rows")
        flat = tuple(x for r in data for x in r)
        return cls(len(data), width, flat)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def with_row(self, row: Iterable) -> "RatMatrix":
        extra = _fraction_row(row)
        if len(extra) != self.cols:
            raise ValueError(f"row of length {len(extra)} appended to {self.cols}-column matrix")
        return RatMatrix(self.rows + 1, self.cols, self.entries + extra)

    def stack(self, other: "RatMatrix") -> "RatMatrix":
        if other.cols != self.cols:
            raise ValueError("stacked matrices must share a column count")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def take_columns(self, indices: Sequence[int]) -> "RatMatrix":
        picked = [self.column(j) for j in indices]
        # columns become rows; every rank computed from this is unaffected
        return RatMatrix.from_rows(picked, cols=self.rows)


def _primitive_int_row(row: Sequence[Fraction]) -> list[int]:
    """Clear denominators and divide by the content, keeping the sign."""
    den = 1
    for x in row:
        d = x.denominator
        den = den * d // gcd(den, d)
    ints = [x.numerator * (den // x.denominator) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _int_rank(work: list[list[int]], cols: int) -> int:
    nrows = len(work)
    rank = 0
    col = 0
    while rank < nrows and col < cols:
        pivot = None
        for i in range(rank, nrows):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        prow = work[rank]
        for i in range(rank + 1, nrows):
            xi = work[i][col]
            if not xi:
                continue
            merged = [pv * a - xi * b for a, b in zip(work[i], prow)]
            g = 0
            for v in merged:
                g = gcd(g, v)
            if g > 1:
                merged = [v // g for v in merged]
            work[i] = merged
        rank += 1
        col += 1
    return rank


def rat_rank(m: RatMatrix) -> int:
    """Exact rank of ``m`` over the rationals."""
    work = []
    for i in range(m.rows):
        row = _primitive_int_row(m.row(i))
        if any(row):
            work.append(row)
    return _int_rank(work, m.cols)


def in_row_span(vector: Sequence, m: RatMatrix) -> bool:
    """Whether ``vector`` lies in the row span of ``m``."""
    v = _fraction_row(vector)
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} against {m.cols}-column matrix")
    base = rat_rank(m)
    return rat_rank(m.with_row(v)) == base


def span_intersection_dim(m1: RatMatrix, m2: RatMatrix) -> int:
    """Projective dimension of the intersection of the two row spans.

    Computed from the Grassmann formula: with r1, r2 the ranks and rs the
    rank of the stacked matrix, the result is r1 + r2 - rs - 1.  An empty
    intersection comes out as -1.
    """
    if m1.cols != m2.cols:
        raise ValueError("span intersection needs matrices with equal column counts")
    r1 = rat_rank(m1)
    r2 = rat_rank(m2)
    rs = rat_rank(m1.stack(m2))
    return r1 + r2 - rs - 1


def solve_row_combination(target: Sequence, m: RatMatrix) -> tuple[Fraction, ...] | None:
    """Coefficients ``x`` with ``sum x_i * row_i = target``, or None.

    Plain Gaussian elimination over Fractions on the transposed system.
    When the rows are dependent any one solution is returned (free
    coefficients are set to zero).
    """
    v = _fraction_row(target)
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} against {m.cols}-column matrix")
    nrows = m.cols        # equations, one per coordinate
    ncols = m.rows        # unknowns, one per row of m
    aug = [[m.entries[j * m.cols + i] for j in range(ncols)] + [v[i]] for i in range(nrows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        sel = None
        for i in range(row, nrows):
            if aug[i][col]:
                sel = i
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(nrows):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == nrows:
            break
    for i in range(row, nrows):
        if aug[i][ncols]:
            return None
    coeffs = [Fraction(0)] * ncols
    for r, c in pivots:
        coeffs[c] = aug[r][ncols]
    return tuple(coeffs)
