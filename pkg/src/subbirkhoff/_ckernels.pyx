# cython: language_level=3
"""Compiled integer kernels; same contracts as ``_pykernels``."""
from libc.stdlib cimport malloc, free


cdef int* _flatten(list adj, int n, int** offsets_out):
    cdef int total = 0
    cdef int i, j, k
    for i in range(n):
        total += len(adj[i])
    cdef int* flat = <int*>malloc((total + 1) * sizeof(int))
    cdef int* offsets = <int*>malloc((n + 1) * sizeof(int))
    if flat == NULL or offsets == NULL:
        free(flat)
        free(offsets)
        raise MemoryError()
    k = 0
    for i in range(n):
        offsets[i] = k
        for j in adj[i]:
            flat[k] = j
            k += 1
    offsets[n] = k
    offsets_out[0] = offsets
    return flat


cdef inline int _first_free(int u, int* flat, int* offsets, int* owner):
    cdef int i
    for i in range(offsets[u], offsets[u + 1]):
        if owner[flat[i]] == -1:
            return flat[i]
    return -1


def bipartite_matching(int n_rows, int n_cols, list adj):
    cdef int* offsets
    cdef int* flat = _flatten(adj, n_rows, &offsets)
    cdef int* match = <int*>malloc((n_rows + 1) * sizeof(int))
    cdef int* owner = <int*>malloc((n_cols + 1) * sizeof(int))
    cdef char* seen = <char*>malloc(n_cols + 1)
    cdef int* rows = <int*>malloc((n_rows + 2) * sizeof(int))
    cdef int* pos = <int*>malloc((n_rows + 2) * sizeof(int))
    cdef int* cols = <int*>malloc((n_rows + 2) * sizeof(int))
    cdef int root, depth, ncols, u, i, c, j
    try:
        for i in range(n_rows):
            match[i] = -1
        for i in range(n_cols):
            owner[i] = -1
        for root in range(n_rows):
            for i in range(n_cols):
                seen[i] = 0
            depth = 1
            ncols = 0
            rows[0] = root
            pos[0] = offsets[root]
            c = _first_free(root, flat, offsets, owner)
            while depth > 0:
                if c >= 0:
                    cols[ncols] = c
                    ncols += 1
                    for j in range(depth):
                        match[rows[j]] = cols[j]
                        owner[cols[j]] = rows[j]
                    break
                u = rows[depth - 1]
                i = pos[depth - 1]
                while i < offsets[u + 1] and seen[flat[i]]:
                    i += 1
                if i == offsets[u + 1]:
                    depth -= 1
                    if ncols > 0:
                        ncols -= 1
                    continue
                c = flat[i]
                seen[c] = 1
                pos[depth - 1] = i + 1
                cols[ncols] = c
                ncols += 1
                rows[depth] = owner[c]
                pos[depth] = offsets[owner[c]]
                depth += 1
                c = _first_free(owner[c], flat, offsets, owner)
        return [match[i] for i in range(n_rows)]
    finally:
        free(flat)
        free(offsets)
        free(match)
        free(owner)
        free(seen)
        free(rows)
        free(pos)
        free(cols)


def strong_components(int n, list adj):
    cdef int* offsets
    cdef int* flat = _flatten(adj, n, &offsets)
    cdef int* index = <int*>malloc((n + 1) * sizeof(int))
    cdef int* low = <int*>malloc((n + 1) * sizeof(int))
    cdef char* on_stack = <char*>malloc(n + 1)
    cdef int* comp = <int*>malloc((n + 1) * sizeof(int))
    cdef int* stack = <int*>malloc((n + 1) * sizeof(int))
    cdef int* work_v = <int*>malloc((n + 1) * sizeof(int))
    cdef int* work_i = <int*>malloc((n + 1) * sizeof(int))
    cdef int sp = 0, wp = 0, counter = 0, n_comp = 0
    cdef int root, v, w, i, parent
    try:
        for i in range(n):
            index[i] = -1
            on_stack[i] = 0
            comp[i] = -1
        for root in range(n):
            if index[root] != -1:
                continue
            index[root] = counter
            low[root] = counter
            counter += 1
            stack[sp] = root
            sp += 1
            on_stack[root] = 1
            work_v[0] = root
            work_i[0] = offsets[root]
            wp = 1
            while wp > 0:
                v = work_v[wp - 1]
                i = work_i[wp - 1]
                if i < offsets[v + 1]:
                    w = flat[i]
                    work_i[wp - 1] = i + 1
                    if index[w] == -1:
                        index[w] = counter
                        low[w] = counter
                        counter += 1
                        stack[sp] = w
                        sp += 1
                        on_stack[w] = 1
                        work_v[wp] = w
                        work_i[wp] = offsets[w]
                        wp += 1
                    elif on_stack[w] and index[w] < low[v]:
                        low[v] = index[w]
                    continue
                wp -= 1
                if wp > 0:
                    parent = work_v[wp - 1]
                    if low[v] < low[parent]:
                        low[parent] = low[v]
                if low[v] == index[v]:
                    while True:
                        sp -= 1
                        w = stack[sp]
                        on_stack[w] = 0
                        comp[w] = n_comp
                        if w == v:
                            break
                    n_comp += 1
        return [comp[i] for i in range(n)]
    finally:
        free(flat)
        free(offsets)
        free(index)
        free(low)
        free(on_stack)
        free(comp)
        free(stack)
        free(work_v)
        free(work_i)


def permutation_cover(int n, list rowmasks):
    if n > 63:
        raise ValueError("permutation_cover supports n <= 63")
    cdef unsigned long long masks[64]
    cdef unsigned long long cover[64]
    cdef int choice[64]
    cdef unsigned long long used = 0
    cdef int r = 0, c, i
    for i in range(n):
        masks[i] = rowmasks[i]
        cover[i] = 0
        choice[i] = -1
    if n == 0:
        return []
    # depth-first over all permutations, pruning absent cells
    while r >= 0:
        if choice[r] >= 0:
            used &= ~(1ULL << choice[r])
        c = choice[r] + 1
        while c < n and (not (masks[r] >> c) & 1 or (used >> c) & 1):
            c += 1
        if c >= n:
            choice[r] = -1
            r -= 1
            continue
        choice[r] = c
        used |= 1ULL << c
        if r == n - 1:
            for i in range(n):
                cover[i] |= 1ULL << choice[i]
        else:
            r += 1
    return [int(cover[i]) for i in range(n)]


def zero_block_exists(int n, list rowmasks):
    if n > 30:
        raise ValueError("zero_block_exists supports n <= 30")
    cdef unsigned long long masks[64]
    cdef unsigned long long subset, used, x
    cdef int r, size, free_cols
    for r in range(n):
        masks[r] = rowmasks[r]
    subset = 1
    while subset < (1ULL << n) - 1:
        used = 0
        size = 0
        for r in range(n):
            if (subset >> r) & 1:
                used |= masks[r]
                size += 1
        x = used
        free_cols = n
        while x:
            x &= x - 1
            free_cols -= 1
        if free_cols >= n - size:
            return True
        subset += 1
    return False
