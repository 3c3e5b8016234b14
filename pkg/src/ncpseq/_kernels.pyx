# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of ncpseq._kernels_py: same functions, results, order.

See _kernels_py for the algorithm notes.  Open-block stacks live in an
arena with one row per recursion depth, so sibling branches cannot
clobber each other's state when a join truncates the stack.
"""

from libc.stdlib cimport free, malloc


cdef tuple _emit(int m, int created, int* owner):
    cdef list members = [[] for _ in range(created)]
    cdef int e
    for e in range(1, m + 1):
        (<list>members[owner[e]]).append(e)
    return tuple(tuple(b) for b in members)


cdef long long _part_rec(int e, int m, int target, int* owner, int* rows,
                         int row_width, int stack_len, int created, list out):
    cdef long long total = 0
    cdef int t, i
    cdef int* cur
    cdef int* nxt
    if target >= 0 and not (created <= target <= created + m - e + 1):
        return 0
    if e > m:
        if out is not None:
            out.append(_emit(m, created, owner))
        return 1
    cur = rows + e * row_width
    nxt = rows + (e + 1) * row_width
    owner[e] = created
    for i in range(stack_len):
        nxt[i] = cur[i]
    nxt[stack_len] = created
    total += _part_rec(e + 1, m, target, owner, rows, row_width,
                       stack_len + 1, created + 1, out)
    for t in range(stack_len - 2, -1, -1):
        owner[e] = cur[t]
        for i in range(t + 1):
            nxt[i] = cur[i]
        total += _part_rec(e + 1, m, target, owner, rows, row_width,
                           t + 1, created, out)
    return total


cdef long long _partition_walk(int m, int target, list out) except -1:
    if m < 1:
        raise ValueError("ground size must be at least 1")
    cdef int row_width = m + 1
    cdef int* owner = <int*>malloc((m + 1) * sizeof(int))
    cdef int* rows = <int*>malloc((m + 2) * row_width * sizeof(int))
    if owner == NULL or rows == NULL:
        free(owner)
        free(rows)
        raise MemoryError()
    cdef long long total
    try:
        total = _part_rec(1, m, target, owner, rows, row_width, 0, 0, out)
    finally:
        free(owner)
        free(rows)
    return total


def ssp_partitions(int m):
    """All semi-special partitions of [m], in construction order."""
    cdef list out = []
    _partition_walk(m, -1, out)
    return out


def count_ssp_partitions(int m):
    """Number of semi-special partitions of [m], by the same walk."""
    return _partition_walk(m, -1, None)


def special_partitions(int n):
    """All special partitions of [2n+1]: semi-special with n+1 blocks."""
    cdef list out = []
    _partition_walk(2 * n + 1, n + 1, out)
    return out


def count_special_partitions(int n):
    """Number of special partitions of [2n+1], by the same walk."""
    return _partition_walk(2 * n + 1, n + 1, None)


cdef void _min_rec(int e, int m, int open_count, int created, int* best) noexcept:
    cdef int keep
    if created >= best[0]:
        return
    if e > m:
        best[0] = created
        return
    for keep in range(open_count - 1, 0, -1):
        _min_rec(e + 1, m, keep, created, best)
    _min_rec(e + 1, m, open_count + 1, created + 1, best)


def ssp_min_blocks(int m):
    """Smallest block count over all semi-special partitions of [m]."""
    if m < 1:
        raise ValueError("ground size must be at least 1")
    cdef int best = m
    _min_rec(1, m, 0, 0, &best)
    return best


cdef long long _seq_rec(int q, int n, int* values, int* rows, int row_width,
                        list out):
    cdef long long total = 0
    cdef int m, p, nb, lo
    cdef int* cur
    cdef int* nxt
    cdef list entries
    if q == 0:
        if out is not None:
            entries = []
            for p in range(1, n + 1):
                entries.append(values[p])
            out.append(tuple(entries))
        return 1
    cur = rows + q * row_width
    nxt = rows + (q - 1) * row_width
    for m in range(1, cur[q] + 1):
        values[q] = m
        for p in range(1, q):
            nxt[p] = cur[p]
        lo = q - m + 1
        if lo < 1:
            lo = 1
        for p in range(lo, q):
            nb = m - (q - p)
            if nb < nxt[p]:
                nxt[p] = nb
        total += _seq_rec(q - 1, n, values, rows, row_width, out)
    return total


cdef long long _sequence_walk(int n, list out) except -1:
    cdef int row_width = n + 1
    cdef int* values = <int*>malloc((n + 1) * sizeof(int))
    cdef int* rows = <int*>malloc((n + 1) * row_width * sizeof(int))
    if values == NULL or rows == NULL:
        free(values)
        free(rows)
        raise MemoryError()
    cdef int p
    cdef long long total
    for p in range(n + 1):
        rows[n * row_width + p] = p
    try:
        total = _seq_rec(n, n, values, rows, row_width, out)
    finally:
        free(values)
        free(rows)
    return total


def catalan_sequences(int n):
    """All of S_n as tuples, depth-first, smaller choices first."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cdef list out = []
    _sequence_walk(n, out)
    return out


def count_catalan_sequences(int n):
    """|S_n|, counted by the same walk as catalan_sequences."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _sequence_walk(n, None)
