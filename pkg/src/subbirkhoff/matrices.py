"""Exact rational matrices and the linear algebra the rest of the package needs.

Every scalar is a :class:`fractions.Fraction`. Floats are refused at the
boundary so no binary rounding can leak into support detection or ceilings.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

_DECIMAL = re.compile(r"-?\d+(\.\d+)?")
_FRACTION = re.compile(r"-?\d+/\d+")


class SubstochasticError(ValueError):
    """Raised when a matrix is not doubly substochastic."""


def rational_from_text(text: str) -> Fraction:
    """Parse ``"0.1"``, ``"-3"`` or ``"7/12"`` into an exact fraction.

    Decimals are read as base-10 fractions, never via ``float``.
    """
    s = text.strip()
    if _DECIMAL.fullmatch(s):
        return Fraction(s)
    if _FRACTION.fullmatch(s):
        num, den = s.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    raise ValueError(f"not an exact number: {text!r}")


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_text(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


class Matrix:
    """Immutable dense matrix of fractions, stored row-major."""

    __slots__ = ("_rows", "n_rows", "n_cols")

    def __init__(self, rows: Iterable[Iterable], n_cols: int | None = None):
        grid = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if n_cols is None:
            n_cols = len(grid[0]) if grid else 0
        for i, row in enumerate(grid):
            if len(row) != n_cols:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n_cols}")
        self._rows = grid
        self.n_rows = len(grid)
        self.n_cols = n_cols

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> Matrix:
        n_cols = n_rows if n_cols is None else n_cols
        return cls(([0] * n_cols for _ in range(n_rows)), n_cols=n_cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), n_cols=n)

    @classmethod
    def from_blocks(cls, top_left: Matrix, top_right: Matrix,
                    bottom_left: Matrix, bottom_right: Matrix) -> Matrix:
        top = [a + b for a, b in zip(top_left.rows, top_right.rows)]
        bottom = [a + b for a, b in zip(bottom_left.rows, bottom_right.rows)]
        return cls(top + bottom, n_cols=top_left.n_cols + top_right.n_cols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self._rows)

    def transpose(self) -> Matrix:
        return Matrix(zip(*self._rows), n_cols=self.n_rows) if self.n_rows else Matrix.zeros(self.n_cols, 0)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Matrix:
        return Matrix((row[c0:c1] for row in self._rows[r0:r1]), n_cols=c1 - c0)

    def scaled(self, c) -> Matrix:
        c = as_rational(c)
        return Matrix(([c * x for x in row] for row in self._rows), n_cols=self.n_cols)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
                      n_cols=self.n_cols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + other.scaled(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def nonzero_cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self._rows) for j, x in enumerate(row) if x != 0]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self._rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(r) for r in self.to_strings())
        return f"Matrix([{body}])"


def sigma(m: Matrix) -> Fraction:
    """Sum of all entries."""
    return sum((x for row in m.rows for x in row), Fraction(0))


def line_sums(m: Matrix) -> tuple[list[Fraction], list[Fraction]]:
    rows = [sum(row, Fraction(0)) for row in m.rows]
    cols = [sum(m.column(j), Fraction(0)) for j in range(m.n_cols)]
    return rows, cols


@dataclass(frozen=True)
class SubstochasticMatrix:
    """A validated doubly substochastic matrix with cached total and sub-defect."""

    inner: Matrix
    sigma: Fraction
    sub_defect: int

    @property
    def n(self) -> int:
        return self.inner.n_rows


def validate_substochastic(m: Matrix) -> SubstochasticMatrix:
    """Wrap ``m`` after an exact check of nonnegativity and line sums."""
    if not m.is_square:
        raise SubstochasticError(f"matrix is {m.n_rows}x{m.n_cols}, not square")
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            if x < 0:
                raise SubstochasticError(f"negative entry {format_rational(x)} at ({i + 1},{j + 1})")
    rows, cols = line_sums(m)
    for kind, sums in (("row", rows), ("column", cols)):
        for i, s in enumerate(sums):
            if s > 1:
                raise SubstochasticError(
                    f"{kind} {i + 1} sum {format_rational(s)} > 1 (excess {format_rational(s - 1)})")
    total = sigma(m)
    return SubstochasticMatrix(m, total, math.ceil(m.n_rows - total))


def sub_defect(b: SubstochasticMatrix) -> int:
    """Smallest k such that b embeds in an (n+k)-sided doubly stochastic matrix."""
    return math.ceil(b.n - b.sigma)


def is_doubly_stochastic(m: Matrix) -> bool:
    if not m.is_square or any(x < 0 for row in m.rows for x in row):
        return False
    rows, cols = line_sums(m)
    return all(s == 1 for s in rows) and all(s == 1 for s in cols)


# -- exact elimination ------------------------------------------------------

def _integer_rows(m: Matrix | Sequence[Sequence]) -> tuple[list[list[int]], int]:
    rows = m.rows if isinstance(m, Matrix) else m
    out = []
    n_cols = m.n_cols if isinstance(m, Matrix) else (len(rows[0]) if rows else 0)
    for row in rows:
        row = [as_rational(x) for x in row]
        scale = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out, n_cols


def _primitive(row: list[int]) -> list[int]:
    g = math.gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def _eliminate(rows: list[list[int]], n_cols: int, stop_at_free: bool):
    """Fraction-free Gauss-Jordan on integer rows, in place.

    Pivot choice is the first row (at or below the current one) with a
    nonzero in the column. Returns ``(pivots, free)`` where ``pivots`` maps
    pivot column -> row index. With ``stop_at_free`` it halts at the first
    free column, leaving later columns unreduced.
    """
    pivots: dict[int, int] = {}
    free: list[int] = []
    r = 0
    for col in range(n_cols):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            free.append(col)
            if stop_at_free:
                break
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r]
        a = piv[col]
        for i, other in enumerate(rows):
            if i == r:
                continue
            b = other[col]
            if b:
                rows[i] = _primitive([a * x - b * y for x, y in zip(other, piv)])
        pivots[col] = r
        r += 1
    return pivots, free


def _basis_vector(rows, pivots, free_col, n_cols) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n_cols
    v[free_col] = Fraction(1)
    for pc, ri in pivots.items():
        if pc < free_col:
            v[pc] = Fraction(-rows[ri][free_col], rows[ri][pc])
    return tuple(v)


def rational_nullspace(m: Matrix) -> list[tuple[Fraction, ...]]:
    """Exact basis of ``{v : m v = 0}``, one vector per free column."""
    rows, n_cols = _integer_rows(m)
    pivots, free = _eliminate(rows, n_cols, stop_at_free=False)
    return [_basis_vector(rows, pivots, f, n_cols) for f in free]


def first_dependency(m: Matrix) -> tuple[Fraction, ...] | None:
    """The nullspace basis vector of the first free column, or None.

    Equals ``rational_nullspace(m)[0]`` but stops eliminating as soon as
    that column is reached; only columns up to it can be nonzero.
    """
    rows, n_cols = _integer_rows(m)
    pivots, free = _eliminate(rows, n_cols, stop_at_free=True)
    if not free:
        return None
    return _basis_vector(rows, pivots, free[0], n_cols)


def rank(m: Matrix) -> int:
    rows, n_cols = _integer_rows(m)
    pivots, _ = _eliminate(rows, n_cols, stop_at_free=False)
    return len(pivots)
