"""Pure-Python integer kernels.

Reference twin of ``_ckernels.pyx``. Both modules must return identical
results for identical inputs; ``tests/test_kernels.py`` enforces this.

Conventions shared by both backends: vertices are 0-indexed ints, adjacency
is a list of ascending int lists, and row patterns are given as bitmasks
(bit ``c`` of ``rowmasks[r]`` set iff cell ``(r, c)`` is present).
"""
from __future__ import annotations

from itertools import permutations


def bipartite_matching(n_rows: int, n_cols: int, adj: list[list[int]]) -> list[int]:
    """Maximum matching by augmenting paths (Kuhn), free columns first.

    Rows are processed in increasing order. A row visited by the search
    takes its first free column if it has one; otherwise the search moves
    through its taken columns in adjacency order. Returns ``match[r]``
    (column or -1).
    """
    match = [-1] * n_rows
    owner = [-1] * n_cols

    def first_free(u):
        for c in adj[u]:
            if owner[c] == -1:
                return c
        return -1

    for root in range(n_rows):
        seen = [False] * n_cols
        rows = [root]
        pos = [0]
        cols: list[int] = []
        c = first_free(root)
        while rows:
            if c >= 0:
                cols.append(c)
                for r, cc in zip(rows, cols):
                    match[r] = cc
                    owner[cc] = r
                break
            u = rows[-1]
            nbrs = adj[u]
            i = pos[-1]
            while i < len(nbrs) and seen[nbrs[i]]:
                i += 1
            if i == len(nbrs):
                rows.pop()
                pos.pop()
                if cols:
                    cols.pop()
                continue
            c = nbrs[i]
            seen[c] = True
            pos[-1] = i + 1
            cols.append(c)
            rows.append(owner[c])
            pos.append(0)
            c = first_free(owner[c])
    return match


def strong_components(n: int, adj: list[list[int]]) -> list[int]:
    """Tarjan's algorithm, iterative.

    Returns ``comp[v]``; components are numbered in completion order, which
    is a reverse topological order of the condensation.
    """
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                w = nbrs[i]
                work[-1] = (v, i + 1)
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
    return comp


def permutation_cover(n: int, rowmasks: list[int]) -> list[int]:
    """Union of all permutation matrices dominated by the pattern.

    Exhaustive over the ``n!`` permutations. Returns per-row bitmasks.
    """
    cover = [0] * n
    for perm in permutations(range(n)):
        if all(rowmasks[r] >> perm[r] & 1 for r in range(n)):
            for r in range(n):
                cover[r] |= 1 << perm[r]
    return cover


def zero_block_exists(n: int, rowmasks: list[int]) -> bool:
    """True iff some s x (n - s) all-zero submatrix exists, 1 <= s <= n - 1."""
    for subset in range(1, (1 << n) - 1):
        used = 0
        size = 0
        for r in range(n):
            if subset >> r & 1:
                used |= rowmasks[r]
                size += 1
        if n - bin(used).count("1") >= n - size:
            return True
    return False
