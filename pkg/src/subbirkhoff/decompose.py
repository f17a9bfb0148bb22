"""Convex combinations of subpermutation matrices.

The pipeline for a doubly substochastic ``B``:

1. border it to its minimal doubly stochastic completion;
2. peel permutations off the completion greedily (Birkhoff);
3. drop affinely dependent terms until at most ``dim(face) + 1`` remain;
4. cut every permutation back to its leading ``n x n`` block and merge
   duplicates.

Step 3 is what enforces the ``nnz(B) + t`` term bound; greedy alone does
not.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from subbirkhoff.completion import CompletionBlocks, minimal_completion
from subbirkhoff.matrices import (
    Matrix,
    SubstochasticMatrix,
    as_rational,
    first_dependency,
    format_rational,
    is_doubly_stochastic,
)
from subbirkhoff.structure import (
    SupportPattern,
    face_dimension,
    fully_indecomposable_components,
    perfect_matching,
    support_pattern,
)


@dataclass(frozen=True, order=True)
class Subpermutation:
    """A partial injective map row -> column on a side-``n`` grid (0-indexed)."""

    n: int
    assignment: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(r), int(c)) for r, c in self.assignment))
        object.__setattr__(self, "assignment", pairs)
        rows = [r for r, _ in pairs]
        cols = [c for _, c in pairs]
        if len(set(rows)) != len(rows):
            raise ValueError(f"row assigned twice in {pairs}")
        if len(set(cols)) != len(cols):
            raise ValueError(f"column assigned twice in {pairs}")
        if any(not (0 <= x < self.n) for x in rows + cols):
            raise ValueError(f"assignment {pairs} outside side {self.n}")

    @classmethod
    def zero(cls, n: int) -> Subpermutation:
        return cls(n, ())

    @classmethod
    def identity(cls, n: int) -> Subpermutation:
        return cls(n, tuple((i, i) for i in range(n)))

    @classmethod
    def from_matrix(cls, m: Matrix) -> Subpermutation:
        cells = []
        for r, c in m.nonzero_cells():
            if m[r, c] != 1:
                raise ValueError(f"entry {m[r, c]} at ({r + 1},{c + 1}) is not 0/1")
            cells.append((r, c))
        return cls(m.n_rows, tuple(cells))

    @property
    def is_permutation(self) -> bool:
        return len(self.assignment) == self.n

    @property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.assignment)

    def to_matrix(self) -> Matrix:
        grid = [[0] * self.n for _ in range(self.n)]
        for r, c in self.assignment:
            grid[r][c] = 1
        return Matrix(grid, n_cols=self.n)


@dataclass(frozen=True)
class ConvexCombination:
    """Weighted subpermutation terms. Construction does not validate the
    weights; use :func:`verify_combination` or :meth:`is_convex`."""

    side: int
    terms: tuple[tuple[Fraction, Subpermutation], ...]

    @classmethod
    def of(cls, side: int, terms: Iterable[tuple]) -> ConvexCombination:
        return cls(side, tuple((as_rational(w), t) for w, t in terms))

    @property
    def weights(self) -> list[Fraction]:
        return [w for w, _ in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def value(self) -> Matrix:
        grid = [[Fraction(0)] * self.side for _ in range(self.side)]
        for w, term in self.terms:
            for r, c in term.assignment:
                grid[r][c] += w
        return Matrix(grid, n_cols=self.side)

    def is_convex(self) -> bool:
        return (all(w > 0 for w in self.weights) and sum(self.weights, Fraction(0)) == 1
                and len({t for _, t in self.terms}) == len(self.terms))

    def canonical(self) -> ConvexCombination:
        """Terms by descending weight, ties by assignment."""
        return ConvexCombination(self.side, tuple(sorted(self.terms, key=lambda p: (-p[0], p[1].assignment))))


@dataclass(frozen=True)
class DecompositionReport:
    input: SubstochasticMatrix
    completion: CompletionBlocks
    completion_combination: ConvexCombination
    combination: ConvexCombination
    nnz: int
    t: int
    bound: int
    face_dim: int
    greedy_count_before_reduction: int
    reduced_count: int

    @property
    def term_count(self) -> int:
        return len(self.combination)


def _merge(terms: Iterable[tuple[Fraction, Subpermutation]]) -> list[tuple[Fraction, Subpermutation]]:
    merged: dict[Subpermutation, Fraction] = {}
    for w, t in terms:
        merged[t] = merged.get(t, Fraction(0)) + w
    return [(w, t) for t, w in merged.items() if w != 0]


def greedy_birkhoff(a: Matrix) -> ConvexCombination:
    """Birkhoff decomposition by repeatedly removing a matched permutation.

    Each step takes the deterministic perfect matching of the remainder's
    support and subtracts it with weight equal to its smallest entry, so
    at least one support cell vanishes per step.
    """
    if not is_doubly_stochastic(a):
        raise ValueError("greedy_birkhoff needs a doubly stochastic matrix")
    n = a.n_rows
    rem = [list(row) for row in a.rows]
    terms = []
    while True:
        cells = frozenset((r, c) for r in range(n) for c in range(n) if rem[r][c] != 0)
        if not cells:
            break
        m = perfect_matching(SupportPattern(n, cells))
        if m is None:
            raise RuntimeError("remainder lost its perfect matching")
        w = min(rem[r][c] for r, c in m.pairs)
        for r, c in m.pairs:
            rem[r][c] -= w
        terms.append((w, Subpermutation(n, m.pairs)))
    if n == 0:
        terms.append((Fraction(1), Subpermutation.zero(0)))
    return ConvexCombination(n, tuple(terms))


def caratheodory_reduce(combo: ConvexCombination, face: SupportPattern) -> ConvexCombination:
    """Remove affinely dependent terms until at most ``dim(face) + 1`` remain.

    For a dependency ``sum(l_i * P_i) = 0, sum(l_i) = 0`` the weights move to
    ``w - theta * l`` with ``theta = min(w_i / l_i : l_i > 0)``; the first
    minimiser drops out and the represented matrix is unchanged.
    """
    for _, term in combo.terms:
        if not term.cells <= face.cells:
            raise ValueError(f"term {term.assignment} leaves the face")
    dim = face_dimension(face)
    cells = sorted(face.cells)
    weights = [w for w, _ in combo.terms]
    terms = [t for _, t in combo.terms]
    while len(terms) > dim + 1:
        system = [[int(cell in t.cells) for t in terms] for cell in cells]
        system.append([1] * len(terms))
        lam = first_dependency(Matrix(system, n_cols=len(terms)))
        if lam is None:
            raise RuntimeError(f"{len(terms)} terms in a face of dimension {dim} are independent")
        if not any(x > 0 for x in lam):
            lam = tuple(-x for x in lam)
        theta, drop = min((weights[i] / x, i) for i, x in enumerate(lam) if x > 0)
        weights = [w - theta * x for w, x in zip(weights, lam)]
        weights[drop] = Fraction(0)
        keep = [i for i, w in enumerate(weights) if w != 0]
        weights = [weights[i] for i in keep]
        terms = [terms[i] for i in keep]
    return ConvexCombination(combo.side, tuple(zip(weights, terms)))


def truncate_and_merge(combo: ConvexCombination, n: int, offset: int = 0) -> ConvexCombination:
    """Restrict every term to the ``n x n`` block starting at ``(offset, offset)``.

    Assignments leaving the block are dropped; terms that coincide afterwards
    are merged by adding weights.
    """
    if n < 0 or offset < 0 or offset + n > combo.side:
        raise ValueError(f"block of side {n} at offset {offset} does not fit side {combo.side}")
    hi = offset + n
    cut = []
    for w, t in combo.terms:
        pairs = tuple((r - offset, c - offset) for r, c in t.assignment
                      if offset <= r < hi and offset <= c < hi)
        cut.append((w, Subpermutation(n, pairs)))
    return ConvexCombination(n, tuple(_merge(cut)))


def completion_bound(b: SubstochasticMatrix, blocks: CompletionBlocks) -> tuple[int, int, int]:
    nnz = support_pattern(b.inner).nnz
    t = fully_indecomposable_components(support_pattern(blocks.full)).t
    return nnz, t, nnz + t


def bound(b: SubstochasticMatrix) -> int:
    """``nnz(B) + t``, with ``t`` the component count of the completion's support."""
    return completion_bound(b, minimal_completion(b))[2]


def decompose_substochastic(b: SubstochasticMatrix, reduce: bool = True) -> DecompositionReport:
    blocks = minimal_completion(b)
    face = support_pattern(blocks.full)
    greedy = greedy_birkhoff(blocks.full)
    reduced = caratheodory_reduce(greedy, face) if reduce else greedy
    final = truncate_and_merge(reduced, b.n)
    nnz, t, bnd = completion_bound(b, blocks)
    return DecompositionReport(
        input=b,
        completion=blocks,
        completion_combination=reduced,
        combination=final,
        nnz=nnz,
        t=t,
        bound=bnd,
        face_dim=face_dimension(face),
        greedy_count_before_reduction=len(greedy),
        reduced_count=len(reduced),
    )


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_combination(b: Matrix, combo: ConvexCombination) -> Verification:
    """Check positivity, unit total, term validity and exact reconstruction."""
    if b.n_rows != combo.side or b.n_cols != combo.side:
        return Verification(False, f"side mismatch: matrix {b.n_rows}x{b.n_cols}, combination {combo.side}")
    for i, w in enumerate(combo.weights):
        if w <= 0:
            return Verification(False, f"weight {i + 1} is {format_rational(w)}, not positive")
    total = sum(combo.weights, Fraction(0))
    if total != 1:
        return Verification(False, f"weights sum {format_rational(total)} != 1")
    for i, (_, t) in enumerate(combo.terms):
        if t.n != combo.side:
            return Verification(False, f"term {i + 1} has side {t.n}")
        try:
            Subpermutation(t.n, t.assignment)
        except ValueError as exc:
            return Verification(False, f"term {i + 1} is not a subpermutation: {exc}")
    value = combo.value()
    for r in range(b.n_rows):
        for c in range(b.n_cols):
            if value[r, c] != b[r, c]:
                return Verification(False, f"reconstruction mismatch at ({r + 1},{c + 1}): "
                                           f"{format_rational(value[r, c])} != {format_rational(b[r, c])}")
    return Verification(True)


def scale_decomposition(combo: ConvexCombination, c) -> ConvexCombination:
    """Combination for ``c * value``: scaled weights plus a zero term of weight ``1 - c``."""
    c = as_rational(c)
    if not 0 <= c <= 1:
        raise ValueError(f"scale {c} outside [0, 1]")
    terms = [(c * w, t) for w, t in combo.terms if c * w != 0]
    if c < 1:
        terms.append((1 - c, Subpermutation.zero(combo.side)))
    return ConvexCombination(combo.side, tuple(_merge(terms)))


def direct_sum_lift(combo: ConvexCombination, k: int) -> ConvexCombination:
    """Replace every term ``P`` by ``I_k (+) P``."""
    if k < 0:
        raise ValueError("identity size must be nonnegative")
    lead = tuple((i, i) for i in range(k))
    return ConvexCombination(combo.side + k, tuple(
        (w, Subpermutation(combo.side + k, lead + tuple((r + k, c + k) for r, c in t.assignment)))
        for w, t in combo.terms))
