# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same surface as ``_pykernels``.

Matrix entries are int64.  Along any word of length n the entries are bounded
by Fibonacci(n + 1), so ``max_len`` is capped at MAX_LEN.
"""
from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t

NAME = "cython"
MAX_LEN = 80


cdef struct Counts:
    int max_len
    int64_t *pairs      # (max_len + 1) ** 2, row = U count
    int64_t *prim
    int64_t mismatches
    char *stack         # PDA stack, bottom at index 0
    int height


cdef inline bint _identity(int64_t b, int64_t c) nogil:
    return b == 0 and c == 0


cdef void _visit(Counts *k, int64_t a, int64_t b, int64_t c, int64_t d,
                 int n, int u, bint hit) noexcept nogil:
    if _identity(b, c):
        k.pairs[u * (k.max_len + 1) + n - u] += 1
        if n:
            if not hit:
                k.prim[n] += 1
            hit = True
    if n == k.max_len:
        return
    _visit(k, -b, a + b, -d, c + d, n + 1, u + 1, hit)
    _visit(k, -b, a, -d, c, n + 1, u, hit)


cdef inline void _push(Counts *k, bint is_u) noexcept nogil:
    cdef char top = k.stack[k.height - 1]
    if is_u:
        if top == 1:
            k.stack[k.height - 1] = 2
        elif top == 2:
            k.height -= 1
        else:
            k.stack[k.height] = 1
            k.height += 1
    else:
        if top == 3:
            k.height -= 1
        else:
            k.stack[k.height] = 3
            k.height += 1


cdef void _visit_pda(Counts *k, int64_t a, int64_t b, int64_t c, int64_t d,
                     int n, int u, bint hit) noexcept nogil:
    cdef bint accepted = k.height == 1
    cdef int height
    cdef char top
    if accepted != _identity(b, c):
        k.mismatches += 1
    if accepted:
        k.pairs[u * (k.max_len + 1) + n - u] += 1
        if n:
            if not hit:
                k.prim[n] += 1
            hit = True
    if n == k.max_len:
        return
    height = k.height
    top = k.stack[height - 1]
    _push(k, True)
    _visit_pda(k, -b, a + b, -d, c + d, n + 1, u + 1, hit)
    k.height = height
    k.stack[height - 1] = top
    _push(k, False)
    _visit_pda(k, -b, a, -d, c, n + 1, u, hit)
    k.height = height
    k.stack[height - 1] = top


cdef void _visit_reduced(int64_t *counts, int max_len, int64_t a, int64_t b,
                         int64_t c, int64_t d, int n, int last) noexcept nogil:
    if _identity(b, c):
        counts[n] += 1
    if n == max_len:
        return
    if last != 1:
        _visit_reduced(counts, max_len, -b, a + b, -d, c + d, n + 1, 0)
    if last != 0:
        _visit_reduced(counts, max_len, -a - b, a, -c - d, c, n + 1, 1)
    if last != 3:
        _visit_reduced(counts, max_len, -b, a, -d, c, n + 1, 2)
    if last != 2:
        _visit_reduced(counts, max_len, -b, a, -d, c, n + 1, 3)


cdef int _check_len(int max_len) except -1:
    if max_len < 0 or max_len > MAX_LEN:
        raise ValueError(f"max_len must be in [0, {MAX_LEN}] for int64 entries")
    return 0


cdef object _export(Counts *k):
    cdef int m = k.max_len
    pairs = [[k.pairs[i * (m + 1) + j] for j in range(m + 1)] for i in range(m + 1)]
    prim = [k.prim[i] for i in range(m + 1)]
    return pairs, prim


cdef int _alloc(Counts *k, int max_len) except -1:
    k.max_len = max_len
    k.mismatches = 0
    k.height = 1
    k.pairs = <int64_t *> calloc((max_len + 1) * (max_len + 1), sizeof(int64_t))
    k.prim = <int64_t *> calloc(max_len + 1, sizeof(int64_t))
    k.stack = <char *> calloc(max_len + 2, sizeof(char))
    if k.pairs == NULL or k.prim == NULL or k.stack == NULL:
        _release(k)
        raise MemoryError()
    return 0


cdef void _release(Counts *k) noexcept:
    free(k.pairs)
    free(k.prim)
    free(k.stack)
    k.pairs = NULL
    k.prim = NULL
    k.stack = NULL


def enumerate_identity(int max_len, str prefix=""):
    """Identity-word counts by (U count, S count) and primitive counts by length."""
    cdef Counts k
    cdef int64_t a = 1, b = 0, c = 0, d = 1, t0
    cdef int u = 0, i, n0 = len(prefix)
    cdef bint hit = False
    _check_len(max_len)
    _alloc(&k, max_len)
    try:
        if n0 <= max_len:
            for i, letter in enumerate(prefix):
                if i and _identity(b, c):
                    hit = True
                if letter == "U":
                    t0 = a
                    a, b, c, d = -b, t0 + b, -d, c + d
                    u += 1
                elif letter == "S":
                    a, b, c, d = -b, a, -d, c
                else:
                    raise ValueError(f"bad letter {letter!r}")
            with nogil:
                _visit(&k, a, b, c, d, n0, u, hit)
        return _export(&k)
    finally:
        _release(&k)


def enumerate_pda(int max_len, str prefix=""):
    """PDA acceptance counts and PDA/matrix disagreements; see ``_pykernels``."""
    cdef Counts k
    cdef int64_t a = 1, b = 0, c = 0, d = 1, t0
    cdef int u = 0, i, n0 = len(prefix)
    cdef bint hit = False
    _check_len(max_len)
    _alloc(&k, max_len)
    try:
        if n0 > max_len:
            pairs, prim = _export(&k)
            return pairs, prim, 0
        k.stack[0] = 0
        for i, letter in enumerate(prefix):
            if i and k.height == 1:
                hit = True
            if letter == "U":
                _push(&k, True)
                t0 = a
                a, b, c, d = -b, t0 + b, -d, c + d
                u += 1
            elif letter == "S":
                _push(&k, False)
                a, b, c, d = -b, a, -d, c
            else:
                raise ValueError(f"bad letter {letter!r}")
        with nogil:
            _visit_pda(&k, a, b, c, d, n0, u, hit)
        pairs, prim = _export(&k)
        return pairs, prim, k.mismatches
    finally:
        _release(&k)


def count_reduced(int max_len):
    """Reduced words over {U, U^-1, S, S^-1} equal to the identity, by length."""
    cdef int64_t *counts
    _check_len(max_len)
    counts = <int64_t *> calloc(max_len + 1, sizeof(int64_t))
    if counts == NULL:
        raise MemoryError()
    try:
        with nogil:
            _visit_reduced(counts, max_len, 1, 0, 0, 1, 0, -1)
        return [counts[i] for i in range(max_len + 1)]
    finally:
        free(counts)
