# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Semantics mirror ``_pykernels`` exactly."""

from libc.stdlib cimport malloc, calloc, free, qsort
from libc.string cimport memset, memcpy
from libc.stdint cimport uint64_t, int64_t, int32_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline int _top_bit(uint64_t* row, int words) nogil:
    cdef int w
    for w in range(words - 1, -1, -1):
        if row[w]:
            return w * 64 + 63 - __builtin_clzll(row[w])
    return -1


cdef int _rank_rows(uint64_t* rows, int nrows, int words, int ncols, int32_t* pivot_of) nogil:
    # rows are reduced in place; pivot_of must have room for ncols entries
    cdef int r, c, w, rank = 0
    cdef uint64_t* row
    cdef uint64_t* prow
    for c in range(ncols):
        pivot_of[c] = -1
    for r in range(nrows):
        row = rows + <Py_ssize_t>r * words
        while True:
            c = _top_bit(row, words)
            if c < 0:
                break
            if pivot_of[c] < 0:
                pivot_of[c] = r
                rank += 1
                break
            prow = rows + <Py_ssize_t>pivot_of[c] * words
            for w in range(words):
                row[w] ^= prow[w]
    return rank


def rank_gf2(rows):
    """Rank over GF(2) of the matrix whose rows are the given bit vectors."""
    cdef list lst = [int(r) for r in rows]
    cdef int nrows = len(lst)
    if nrows == 0:
        return 0
    cdef int ncols = 0
    cdef object r
    for r in lst:
        if r < 0:
            raise ValueError("rows must be non-negative")
        if r.bit_length() > ncols:
            ncols = r.bit_length()
    if ncols == 0:
        return 0
    cdef int words = (ncols + 63) // 64
    cdef uint64_t* buf = <uint64_t*>calloc(<size_t>nrows * words, sizeof(uint64_t))
    cdef int32_t* piv = <int32_t*>malloc(ncols * sizeof(int32_t))
    cdef int i, w
    cdef object v
    cdef object mask = (1 << 64) - 1
    try:
        for i in range(nrows):
            v = lst[i]
            w = 0
            while v:
                buf[<Py_ssize_t>i * words + w] = <uint64_t>(v & mask)
                v >>= 64
                w += 1
        return _rank_rows(buf, nrows, words, ncols, piv)
    finally:
        free(buf)
        free(piv)


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef uint64_t x = (<uint64_t*>a)[0]
    cdef uint64_t y = (<uint64_t*>b)[0]
    return (x > y) - (x < y)


cdef struct CanonState:
    int m
    int nf
    uint64_t* facets
    uint64_t* cur
    uint64_t* best
    int* perm
    int* best_perm
    int* used
    int* pos_cell
    int* cell_start
    int* cell_len
    int* members
    int have_best


cdef void _leaf(CanonState* st) noexcept nogil:
    cdef int k, v, cmp = 0
    cdef uint64_t f, g, low
    for k in range(st.nf):
        f = st.facets[k]
        g = 0
        while f:
            low = f & (~f + 1)
            v = 63 - __builtin_clzll(low)
            g |= (<uint64_t>1) << st.perm[v]
            f ^= low
        st.cur[k] = g
    qsort(st.cur, st.nf, sizeof(uint64_t), _cmp_u64)
    if st.have_best:
        for k in range(st.nf):
            if st.cur[k] != st.best[k]:
                cmp = -1 if st.cur[k] < st.best[k] else 1
                break
        if cmp >= 0:
            return
    memcpy(st.best, st.cur, st.nf * sizeof(uint64_t))
    memcpy(st.best_perm, st.perm, st.m * sizeof(int))
    st.have_best = 1


cdef void _search(CanonState* st, int p) noexcept nogil:
    if p == st.m:
        _leaf(st)
        return
    cdef int c = st.pos_cell[p]
    cdef int t, v
    for t in range(st.cell_len[c]):
        v = st.members[st.cell_start[c] + t]
        if st.used[v]:
            continue
        st.used[v] = 1
        st.perm[v] = p
        _search(st, p + 1)
        st.used[v] = 0


def canonical_relabel(facets, cells):
    """Minimise the sorted relabelled facet tuple over cell-respecting labelings."""
    cdef list fl = [int(f) for f in facets]
    cdef list cl = [list(c) for c in cells]
    cdef int m = sum(len(c) for c in cl)
    cdef int nf = len(fl)
    if m > 64:
        raise ValueError("at most 64 vertices")
    cdef CanonState st
    st.m = m
    st.nf = nf
    st.have_best = 0
    st.facets = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.cur = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.best = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    st.perm = <int*>calloc(m + 1, sizeof(int))
    st.best_perm = <int*>calloc(m + 1, sizeof(int))
    st.used = <int*>calloc(m + 1, sizeof(int))
    st.pos_cell = <int*>calloc(m + 1, sizeof(int))
    st.cell_start = <int*>calloc(len(cl) + 1, sizeof(int))
    st.cell_len = <int*>calloc(len(cl) + 1, sizeof(int))
    st.members = <int*>calloc(m + 1, sizeof(int))
    cdef int i, k, pos = 0
    try:
        for i in range(nf):
            st.facets[i] = <uint64_t>fl[i]
        for i in range(len(cl)):
            st.cell_start[i] = pos
            st.cell_len[i] = len(cl[i])
            for k in range(len(cl[i])):
                st.members[pos] = cl[i][k]
                st.pos_cell[pos] = i
                pos += 1
        with nogil:
            _search(&st, 0)
        if not st.have_best:
            return (), list(range(m))
        key = tuple([st.best[i] for i in range(nf)])
        perm = [st.best_perm[i] for i in range(m)]
        return key, perm
    finally:
        free(st.facets); free(st.cur); free(st.best); free(st.perm)
        free(st.best_perm); free(st.used); free(st.pos_cell)
        free(st.cell_start); free(st.cell_len); free(st.members)


def bigraded_gf2(faces, int m, Py_ssize_t start=0, Py_ssize_t stop=-1):
    """Hochster sweep over GF(2); see ``_pykernels.bigraded_gf2``."""
    if m > 20:
        raise ValueError("compiled sweep supports m <= 20")
    if stop < 0:
        stop = (<Py_ssize_t>1) << m
    cdef list fl = sorted([int(f) for f in faces], key=lambda f: (bin(f).count("1"), f))
    cdef int nf = len(fl)
    cdef uint64_t* fa = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    cdef int* fsize = <int*>malloc((nf + 1) * sizeof(int))
    cdef int32_t* index = <int32_t*>malloc(((<size_t>1) << m) * sizeof(int32_t))
    cdef uint64_t* inJ = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    cdef int64_t* table = <int64_t*>calloc((m + 1) * (m + 1), sizeof(int64_t))
    cdef int* counts = <int*>calloc(m + 2, sizeof(int))
    cdef int* ranks = <int*>calloc(m + 3, sizeof(int))
    cdef int* size_start = <int*>calloc(m + 3, sizeof(int))
    cdef uint64_t* rows = NULL
    cdef int32_t* piv = NULL
    cdef size_t rows_cap = 0
    cdef int piv_cap = 0
    cdef Py_ssize_t idx
    cdef uint64_t J, notJ, f, g, low
    cdef int i, s, nj, n_prev, n_cur, words, k, b, lo, hi, maxs, top
    try:
        for i in range(nf):
            fa[i] = <uint64_t>fl[i]
            fsize[i] = __builtin_popcountll(fa[i])
        # faces are grouped by size; size_start[s] is the first index of size s
        maxs = fsize[nf - 1] if nf else 0
        k = 0
        for s in range(m + 2):
            while k < nf and fsize[k] < s:
                k += 1
            size_start[s] = k
        size_start[m + 2] = nf
        for idx in range(start, stop):
            J = <uint64_t>(idx ^ (idx >> 1))
            notJ = ~J
            nj = __builtin_popcountll(J)
            counts[0] = 1
            ranks[0] = 0
            index[0] = 0
            top = 0
            # faces of size s inside J are collected into inJ[lo:hi]
            hi = 0
            n_prev = 1
            for s in range(1, nj + 1):
                if s > maxs:
                    break
                lo = hi
                for k in range(size_start[s], size_start[s + 1]):
                    if not (fa[k] & notJ):
                        inJ[hi] = fa[k]
                        hi += 1
                n_cur = hi - lo
                if n_cur == 0:
                    break
                top = s
                counts[s] = n_cur
                if s == 1:
                    ranks[1] = 1
                else:
                    words = (n_prev + 63) // 64
                    if <size_t>n_cur * words > rows_cap:
                        free(rows)
                        rows_cap = <size_t>n_cur * words * 2
                        rows = <uint64_t*>malloc(rows_cap * sizeof(uint64_t))
                    if n_prev > piv_cap:
                        free(piv)
                        piv_cap = n_prev * 2
                        piv = <int32_t*>malloc(piv_cap * sizeof(int32_t))
                    memset(rows, 0, <size_t>n_cur * words * sizeof(uint64_t))
                    for k in range(n_cur):
                        f = inJ[lo + k]
                        g = f
                        while g:
                            low = g & (~g + 1)
                            b = index[f ^ low]
                            rows[<size_t>k * words + (b >> 6)] |= (<uint64_t>1) << (b & 63)
                            g ^= low
                    ranks[s] = _rank_rows(rows, n_cur, words, n_prev, piv)
                for k in range(n_cur):
                    index[inJ[lo + k]] = k
                n_prev = n_cur
            ranks[top + 1] = 0
            for s in range(top + 1):
                b = counts[s] - ranks[s] - ranks[s + 1]
                if b:
                    table[(nj - s) * (m + 1) + nj] += b
        return [[table[i * (m + 1) + k] for k in range(m + 1)] for i in range(m + 1)]
    finally:
        free(fa); free(fsize); free(index); free(inJ); free(table)
        free(counts); free(ranks); free(size_start); free(rows); free(piv)
