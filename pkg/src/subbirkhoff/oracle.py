"""Exponential-time ground truth for small instances.

Nothing here shares code paths with the fast routines it is used to check:
feasibility uses its own Fraction row reduction and Fourier-Motzkin, and the
structural checks go straight to the definitions (all permutations, all row
subsets) through the brute-force kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from subbirkhoff import kernels
from subbirkhoff.decompose import ConvexCombination, Subpermutation
from subbirkhoff.matrices import Matrix, SubstochasticMatrix
from subbirkhoff.structure import SupportPattern, support_pattern

PATTERN_MAX_SIDE = 6


class BudgetExceeded(RuntimeError):
    """The search would exceed its budget; no answer is claimed."""


@dataclass(frozen=True)
class OracleBudget:
    max_side: int = 4
    max_terms: int = 8
    max_subsets: int = 2_000_000

    def __post_init__(self):
        for name in ("max_side", "max_terms", "max_subsets"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_BUDGET = OracleBudget()


def enumerate_subpermutations(n: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[Subpermutation]:
    """All side-``n`` subpermutations, ordered by rank then lexicographically."""
    if n > budget.max_side:
        raise BudgetExceeded(f"side {n} exceeds max_side {budget.max_side}")
    out = []
    for k in range(n + 1):
        for rows in combinations(range(n), k):
            for cols in permutations(range(n), k):
                out.append(tuple(zip(rows, cols)))
    out.sort(key=lambda a: (len(a), a))
    return [Subpermutation(n, a) for a in out]


def _rref(aug: list[list[Fraction]], n_vars: int) -> tuple[list[list[Fraction]], list[int]] | None:
    """Reduced row echelon form of an augmented system; None if inconsistent."""
    rows = [row[:] for row in aug]
    pivots = []
    r = 0
    for col in range(n_vars):
        p = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[n_vars] != 0 for row in rows[r:]):
        return None
    return rows[:r], pivots


# An inequality is (coeffs, const) meaning sum(coeffs[j] * x_j) + const >= 0.
Ineq = tuple[tuple[Fraction, ...], Fraction]


def _eliminate_last(system: list[Ineq]) -> list[Ineq]:
    lower, upper, rest = [], [], []
    for coeffs, const in system:
        a = coeffs[-1]
        item = (coeffs[:-1], const)
        if a > 0:
            lower.append((a, item))
        elif a < 0:
            upper.append((a, item))
        else:
            rest.append(item)
    out = set(rest)
    # a*x + L >= 0 (a>0) and b*x + U >= 0 (b<0) give  -b*L + a*U >= 0
    for a, (lc, lk) in lower:
        for b, (uc, uk) in upper:
            out.add((tuple(-b * x + a * y for x, y in zip(lc, uc)), -b * lk + a * uk))
    return sorted(out)


def _fourier_motzkin(system: list[Ineq], n_free: int) -> list[Fraction] | None:
    """A feasible point (lexicographically smallest coordinate by coordinate), or None."""
    stages = [system]
    for _ in range(n_free):
        stages.append(_eliminate_last(stages[-1]))
    if any(const < 0 for _, const in stages[-1]):
        return None
    point: list[Fraction] = []
    for j in range(n_free):
        lo, hi = None, None
        for coeffs, const in stages[n_free - j - 1]:
            a = coeffs[j]
            rhs = const + sum((c * x for c, x in zip(coeffs, point)), Fraction(0))
            if a > 0:
                v = -rhs / a
                lo = v if lo is None or v > lo else lo
            elif a < 0:
                v = -rhs / a
                hi = v if hi is None or v < hi else hi
        x = lo if lo is not None else (hi if hi is not None and hi < 0 else Fraction(0))
        point.append(x)
    return point


def exact_feasibility(b: Matrix, terms: Sequence[Subpermutation],
                      budget: OracleBudget = DEFAULT_BUDGET) -> tuple[Fraction, ...] | None:
    """Weights ``w >= 0`` with ``sum(w) = 1`` and ``sum(w_i * terms_i) = b``, or None."""
    m = len(terms)
    if m > budget.max_terms:
        raise BudgetExceeded(f"{m} terms exceed max_terms {budget.max_terms}")
    n = b.n_rows
    aug = []
    for r in range(n):
        for c in range(n):
            aug.append([Fraction(int((r, c) in t.cells)) for t in terms] + [b[r, c]])
    aug.append([Fraction(1)] * m + [Fraction(1)])
    reduced = _rref(aug, m)
    if reduced is None:
        return None
    rows, pivots = reduced
    free = [j for j in range(m) if j not in pivots]
    system: list[Ineq] = []
    for row in rows:
        system.append((tuple(-row[f] for f in free), row[m]))
    for i in range(len(free)):
        system.append((tuple(Fraction(int(i == j)) for j in range(len(free))), Fraction(0)))
    point = _fourier_motzkin(system, len(free))
    if point is None:
        return None
    w = [Fraction(0)] * m
    for f, x in zip(free, point):
        w[f] = x
    for row, p in zip(rows, pivots):
        w[p] = row[m] - sum((row[f] * x for f, x in zip(free, point)), Fraction(0))
    return tuple(w)


def minimal_decomposition(b: SubstochasticMatrix,
                          budget: OracleBudget = DEFAULT_BUDGET) -> ConvexCombination:
    """A convex combination of ``b`` with the fewest possible terms.

    Subsets are scanned by increasing size, lexicographically within a size,
    over the subpermutations whose support fits inside ``b``'s (terms with
    positive weight must). The first feasible size is therefore minimal and
    its weights are all positive. Subsets whose union misses a nonzero cell
    of ``b`` cannot be feasible with positive weights and are skipped before
    the exact solve.
    """
    n = b.n
    support = support_pattern(b.inner).cells
    candidates = [t for t in enumerate_subpermutations(n, budget) if t.cells <= support]
    masks = [sum(1 << (r * n + c) for r, c in t.assignment) for t in candidates]
    full = sum(1 << (r * n + c) for r, c in support)
    scanned = 0
    for m in range(1, len(candidates) + 1):
        if m > budget.max_terms:
            raise BudgetExceeded(f"no decomposition with <= {budget.max_terms} terms")
        for idx in combinations(range(len(candidates)), m):
            scanned += 1
            if scanned > budget.max_subsets:
                raise BudgetExceeded(f"scanned {budget.max_subsets} subsets without an answer")
            union = 0
            for i in idx:
                union |= masks[i]
            if union != full:
                continue
            subset = [candidates[i] for i in idx]
            w = exact_feasibility(b.inner, subset, budget)
            if w is not None and all(x > 0 for x in w):
                return ConvexCombination(n, tuple(zip(w, subset)))
    raise RuntimeError("no decomposition exists; input is not doubly substochastic")


def minimal_term_count(b: SubstochasticMatrix, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    return len(minimal_decomposition(b, budget))


def _check_side(p: SupportPattern, max_side: int) -> None:
    if p.n > max_side:
        raise BudgetExceeded(f"side {p.n} exceeds brute-force limit {max_side}")


def total_support_bruteforce(p: SupportPattern, max_side: int = PATTERN_MAX_SIDE) -> bool:
    """Every cell lies on some permutation inside the pattern (all n! checked)."""
    _check_side(p, max_side)
    masks = p.rowmasks()
    return kernels.permutation_cover(p.n, masks) == masks


def fully_indecomposable_bruteforce(p: SupportPattern, max_side: int = PATTERN_MAX_SIDE) -> bool:
    """No ``s x (n - s)`` zero submatrix, ``1 <= s < n``; a 1x1 pattern must be nonzero."""
    _check_side(p, max_side)
    if p.n == 0:
        return False
    if p.n == 1:
        return bool(p.cells)
    return not kernels.zero_block_exists(p.n, p.rowmasks())
