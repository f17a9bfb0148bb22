"""Minimal doubly stochastic completion by the staircase fill.

A doubly substochastic ``B`` with sub-defect ``k`` is bordered to

    full = [[B, X],
            [Y, Z]]

of side ``n + k``. ``X`` absorbs the row deficits ``1 - r_i(B)``, ``Y`` the
column deficits, and ``Z`` is zero except possibly its last diagonal cell.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from subbirkhoff.matrices import (
    Matrix,
    SubstochasticMatrix,
    as_rational,
    is_doubly_stochastic,
    line_sums,
    sigma,
)


def staircase_fill(deficits: Sequence, k: int) -> Matrix:
    """Spread ``deficits`` over ``k`` unit-capacity columns, moving only down/right.

    Each placement is ``min(remaining row deficit, remaining column
    capacity)``. The cursor moves down when the row is finished, right when
    the column is full, and diagonally when both happen. Rows with no
    deficit are skipped.
    """
    deficits = [as_rational(d) for d in deficits]
    for i, d in enumerate(deficits):
        if not 0 <= d <= 1:
            raise ValueError(f"deficit {d} of row {i + 1} outside [0, 1]")
    total = sum(deficits, Fraction(0))
    if total > k:
        raise ValueError(f"total deficit {total} exceeds {k} columns")
    if k != math.ceil(total):
        raise ValueError(f"column count {k} is not the ceiling of total deficit {total}")

    grid = [[Fraction(0)] * k for _ in deficits]
    remaining = list(deficits)
    capacity = [Fraction(1)] * k
    s = t = 0
    while s < len(deficits):
        if remaining[s] == 0:
            s += 1
            continue
        v = min(remaining[s], capacity[t])
        grid[s][t] = v
        remaining[s] -= v
        capacity[t] -= v
        row_done = remaining[s] == 0
        if capacity[t] == 0:
            t += 1
        if row_done:
            s += 1
    return Matrix(grid, n_cols=k)


@dataclass(frozen=True)
class CompletionBlocks:
    n: int
    k: int
    full: Matrix

    @property
    def D(self) -> Matrix:
        return self.full.block(0, self.n, 0, self.n)

    @property
    def X(self) -> Matrix:
        return self.full.block(0, self.n, self.n, self.n + self.k)

    @property
    def Y(self) -> Matrix:
        return self.full.block(self.n, self.n + self.k, 0, self.n)

    @property
    def Z(self) -> Matrix:
        return self.full.block(self.n, self.n + self.k, self.n, self.n + self.k)

    @property
    def side(self) -> int:
        return self.n + self.k

    @property
    def full_nnz(self) -> int:
        return _nnz(self.full)


def minimal_completion(b: SubstochasticMatrix) -> CompletionBlocks:
    n, k = b.n, b.sub_defect
    if k == 0:
        return CompletionBlocks(n, 0, b.inner)
    rows, cols = line_sums(b.inner)
    x = staircase_fill([1 - r for r in rows], k)
    y = staircase_fill([1 - c for c in cols], k).transpose()
    corner = 1 - sum(x.column(k - 1), Fraction(0))
    z = Matrix(([corner if i == j == k - 1 else 0 for j in range(k)] for i in range(k)), n_cols=k)
    return CompletionBlocks(n, k, Matrix.from_blocks(b.inner, x, y, z))


@dataclass
class StructureReport:
    sigma_X: Fraction
    sigma_Y: Fraction
    column_sums_X: list[Fraction]
    row_sums_Y: list[Fraction]
    nnz_D: int
    nnz_X: int
    nnz_Y: int
    nnz_Z: int
    nnz_full: int
    doubly_stochastic: bool
    lemma31: dict[str, bool] = field(default_factory=dict)
    lemma32: dict[str, bool] = field(default_factory=dict)

    @property
    def lemma31_ok(self) -> bool:
        return all(self.lemma31.values())

    @property
    def lemma32_ok(self) -> bool:
        return all(self.lemma32.values())

    @property
    def ok(self) -> bool:
        return self.doubly_stochastic and self.lemma31_ok and self.lemma32_ok

    def failures(self) -> list[str]:
        bad = [f"lemma31.{k}" for k, v in self.lemma31.items() if not v]
        bad += [f"lemma32.{k}" for k, v in self.lemma32.items() if not v]
        if not self.doubly_stochastic:
            bad.insert(0, "doubly_stochastic")
        return bad


def _nnz(m: Matrix) -> int:
    return sum(1 for row in m.rows for x in row if x != 0)


def _two_entry_rows_ok(m: Matrix, k: int) -> bool:
    counts = [sum(1 for x in row if x != 0) for row in m.rows]
    return all(c <= 2 for c in counts) and sum(1 for c in counts if c == 2) <= max(k - 1, 0)


def verify_completion_structure(blocks: CompletionBlocks) -> StructureReport:
    """Check the block-structure clauses every staircase completion satisfies."""
    n, k = blocks.n, blocks.k
    x, y, z = blocks.X, blocks.Y, blocks.Z
    _, col_x = line_sums(x)
    row_y, _ = line_sums(y)
    sx, sy = sigma(x), sigma(y)
    rep = StructureReport(
        sigma_X=sx, sigma_Y=sy, column_sums_X=col_x, row_sums_Y=row_y,
        nnz_D=_nnz(blocks.D), nnz_X=_nnz(x), nnz_Y=_nnz(y), nnz_Z=_nnz(z),
        nnz_full=_nnz(blocks.full), doubly_stochastic=is_doubly_stochastic(blocks.full),
    )
    rep.lemma31 = {
        "sigma_bounds": k - 1 < sx <= k and sx == sy,
        "unit_columns_X": all(c == 1 for c in col_x[:k - 1]) if k else True,
        "unit_rows_Y": all(r == 1 for r in row_y[:k - 1]) if k else True,
        "positive_columns_X": all(any(v > 0 for v in x.column(j)) for j in range(k)),
        "positive_rows_Y": all(any(v > 0 for v in y.row(i)) for i in range(k)),
    }
    corner_only = all(z[i, j] == 0 for i in range(k) for j in range(k) if (i, j) != (k - 1, k - 1))
    rep.lemma32 = {
        "nnz_X": rep.nnz_X <= n + k - 1 or k == 0,
        "nnz_Y": rep.nnz_Y <= n + k - 1 or k == 0,
        "rows_X_staircase": _two_entry_rows_ok(x, k),
        "columns_Y_staircase": _two_entry_rows_ok(y.transpose(), k),
        "Z_corner": rep.nnz_Z <= 1 and corner_only,
        "nnz_full": rep.nnz_full <= rep.nnz_D + 2 * (n + k) - 1 or n + k == 0,
    }
    return rep
