"""Support patterns of square matrices and their combinatorial structure.

Everything here works on the (0,1) pattern, not on values: perfect
matchings, total support, the fully indecomposable blocks of a
totally supported pattern, and the dimension of the Birkhoff face the
pattern spans.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from subbirkhoff import kernels
from subbirkhoff.matrices import Matrix, rational_nullspace


class NoTotalSupport(ValueError):
    """The pattern has a cell lying on no dominated permutation."""


@dataclass(frozen=True)
class SupportPattern:
    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        for r, c in self.cells:
            if not (0 <= r < self.n and 0 <= c < self.n):
                raise ValueError(f"cell {(r, c)} outside a side-{self.n} pattern")

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[tuple[int, int]]) -> SupportPattern:
        return cls(n, frozenset((int(r), int(c)) for r, c in cells))

    @classmethod
    def full(cls, n: int) -> SupportPattern:
        return cls(n, frozenset((r, c) for r in range(n) for c in range(n)))

    @classmethod
    def identity(cls, n: int) -> SupportPattern:
        return cls(n, frozenset((i, i) for i in range(n)))

    @property
    def nnz(self) -> int:
        return len(self.cells)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for r, c in sorted(self.cells):
            adj[r].append(c)
        return adj

    def rowmasks(self) -> list[int]:
        masks = [0] * self.n
        for r, c in self.cells:
            masks[r] |= 1 << c
        return masks

    def permuted(self, row_perm: list[int], col_perm: list[int]) -> SupportPattern:
        """Pattern whose cell (a, b) is this pattern's (row_perm[a], col_perm[b])."""
        row_pos = {r: a for a, r in enumerate(row_perm)}
        col_pos = {c: b for b, c in enumerate(col_perm)}
        return SupportPattern(self.n, frozenset((row_pos[r], col_pos[c]) for r, c in self.cells))

    def restricted(self, rows: list[int], cols: list[int]) -> SupportPattern:
        """Sub-pattern on the given rows and columns, reindexed in the given order."""
        if len(rows) != len(cols):
            raise ValueError("restriction must be square")
        row_pos = {r: a for a, r in enumerate(rows)}
        col_pos = {c: b for b, c in enumerate(cols)}
        return SupportPattern(len(rows), frozenset(
            (row_pos[r], col_pos[c]) for r, c in self.cells if r in row_pos and c in col_pos))

    def to_matrix(self) -> Matrix:
        return Matrix(([int((r, c) in self.cells) for c in range(self.n)] for r in range(self.n)),
                      n_cols=self.n)


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ComponentDecomposition:
    t: int
    row_blocks: tuple[tuple[int, ...], ...]
    column_blocks: tuple[tuple[int, ...], ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def blocks(self, pattern: SupportPattern) -> list[SupportPattern]:
        return [pattern.restricted(list(r), list(c))
                for r, c in zip(self.row_blocks, self.column_blocks)]


def support_pattern(m: Matrix) -> SupportPattern:
    if not m.is_square:
        raise ValueError(f"support pattern needs a square matrix, got {m.n_rows}x{m.n_cols}")
    return SupportPattern(m.n_rows, frozenset(m.nonzero_cells()))


def maximum_matching(p: SupportPattern) -> list[int]:
    return kernels.bipartite_matching(p.n, p.n, p.adjacency())


def perfect_matching(p: SupportPattern) -> Matching | None:
    """Deterministic perfect matching by augmenting paths, or None."""
    match = maximum_matching(p)
    if any(c < 0 for c in match):
        return None
    return Matching(tuple(enumerate(match)))


def _alternating_components(p: SupportPattern, match: list[int]):
    # rows r -> owner(c) for every unmatched cell (r, c)
    owner = [0] * p.n
    for r, c in enumerate(match):
        owner[c] = r
    adj: list[list[int]] = [[] for _ in range(p.n)]
    for r, c in sorted(p.cells):
        if c != match[r]:
            adj[r].append(owner[c])
    return kernels.strong_components(p.n, adj), owner, adj


def has_total_support(p: SupportPattern) -> bool:
    """Whether every cell lies on a permutation dominated by the pattern.

    A non-matching cell (r, c) lies on one iff r and the row matched to c
    share a strong component of the alternating digraph.
    """
    if not p.cells:
        return True
    m = perfect_matching(p)
    if m is None:
        return False
    match = [c for _, c in m.pairs]
    comp, owner, _ = _alternating_components(p, match)
    return all(match[r] == c or comp[r] == comp[owner[c]] for r, c in p.cells)


def fully_indecomposable_components(p: SupportPattern) -> ComponentDecomposition:
    if p.n == 0:
        return ComponentDecomposition(0, (), (), (), ())
    m = perfect_matching(p)
    if m is None or not has_total_support(p):
        raise NoTotalSupport("pattern lacks total support; components are undefined")
    match = [c for _, c in m.pairs]
    comp, _, adj = _alternating_components(p, match)

    n_comp = max(comp) + 1
    members: list[list[int]] = [[] for _ in range(n_comp)]
    for r in range(p.n):
        members[comp[r]].append(r)
    succ: list[set[int]] = [set() for _ in range(n_comp)]
    indeg = [0] * n_comp
    for r in range(p.n):
        for s in adj[r]:
            a, b = comp[r], comp[s]
            if a != b and b not in succ[a]:
                succ[a].add(b)
                indeg[b] += 1
    heap = [(members[i][0], i) for i in range(n_comp) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (members[j][0], j))

    row_blocks = tuple(tuple(members[i]) for i in order)
    column_blocks = tuple(tuple(match[r] for r in block) for block in row_blocks)
    return ComponentDecomposition(
        t=n_comp,
        row_blocks=row_blocks,
        column_blocks=column_blocks,
        row_perm=tuple(r for block in row_blocks for r in block),
        col_perm=tuple(c for block in column_blocks for c in block),
    )


def face_dimension(p: SupportPattern) -> int:
    """``nnz - 2n + t`` for a totally supported pattern."""
    return p.nnz - 2 * p.n + fully_indecomposable_components(p).t


def incidence_matrix(p: SupportPattern) -> tuple[Matrix, list[tuple[int, int]]]:
    """Row-sum and column-sum equations over the pattern's cells (sorted)."""
    cells = sorted(p.cells)
    rows = [[int(r == i) for r, _ in cells] for i in range(p.n)]
    rows += [[int(c == j) for _, c in cells] for j in range(p.n)]
    return Matrix(rows, n_cols=len(cells)), cells


def face_dimension_via_rank(p: SupportPattern) -> int:
    """Dimension of the face computed as a nullspace dimension, without ``t``."""
    if perfect_matching(p) is None or not has_total_support(p):
        raise NoTotalSupport("pattern lacks total support")
    a, _ = incidence_matrix(p)
    return len(rational_nullspace(a))
