# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: reduced homology of a face list and rank mod p."""

from libc.stdlib cimport malloc, free, calloc
from libc.stdint cimport uint64_t, int64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef int64_t _inv_mod(int64_t a, int64_t p) nogil:
    cdef int64_t t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _rank_dense(int64_t* m, int rows, int cols, int64_t p) nogil:
    """Row-reduce a row-major rows x cols matrix in place; return its rank mod p."""
    cdef int rank = 0, c, r, k, piv
    cdef int64_t inv, f, tmp
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if m[r * cols + c] % p != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(c, cols):
                tmp = m[piv * cols + k]
                m[piv * cols + k] = m[rank * cols + k]
                m[rank * cols + k] = tmp
        inv = _inv_mod(m[rank * cols + c] % p, p)
        for k in range(c, cols):
            m[rank * cols + k] = (m[rank * cols + k] * inv) % p
        for r in range(rank + 1, rows):
            f = m[r * cols + c] % p
            if f == 0:
                continue
            for k in range(c, cols):
                m[r * cols + k] = (m[r * cols + k] - f * m[rank * cols + k]) % p
                if m[r * cols + k] < 0:
                    m[r * cols + k] += p
        rank += 1
    return rank


cdef int _rank_gf2(uint64_t* m, int rows, int words) nogil:
    """Row-reduce packed GF(2) rows (``words`` uint64 per row) in place."""
    cdef int rank = 0, c, r, k, piv, w
    cdef int cols = words * 64
    cdef uint64_t bit, tmp
    for c in range(cols):
        if rank == rows:
            break
        w = c >> 6
        bit = (<uint64_t> 1) << (c & 63)
        piv = -1
        for r in range(rank, rows):
            if m[r * words + w] & bit:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(w, words):
                tmp = m[piv * words + k]
                m[piv * words + k] = m[rank * words + k]
                m[rank * words + k] = tmp
        for r in range(piv + 1, rows):
            if m[r * words + w] & bit:
                for k in range(w, words):
                    m[r * words + k] ^= m[rank * words + k]
        rank += 1
    return rank


def rank_mod_p(matrix, int p):
    """Rank of a dense integer matrix over GF(p)."""
    cdef int rows = len(matrix)
    if rows == 0:
        return 0
    cdef int cols = len(matrix[0])
    if cols == 0:
        return 0
    cdef int64_t* m = <int64_t*> malloc(rows * cols * sizeof(int64_t))
    cdef int r, c
    cdef int64_t v
    try:
        for r in range(rows):
            row = matrix[r]
            for c in range(cols):
                v = row[c] % p
                m[r * cols + c] = v
        return _rank_dense(m, rows, cols, p)
    finally:
        free(m)


cdef int _find(uint64_t* arr, int lo, int hi, uint64_t key) nogil:
    cdef int mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


def reduced_homology(faces, int p):
    """Ranks of reduced homology H~_{-1}, H~_0, ..., H~_top over GF(p).

    ``faces`` must be closed under taking subsets; an empty sequence is the
    void complex and yields ``[0]``.
    """
    cdef int nf = len(faces)
    if nf == 0:
        return [0]
    ordered = sorted(faces, key=lambda f: (bin(f).count("1"), f))
    cdef uint64_t* fa = <uint64_t*> malloc(nf * sizeof(uint64_t))
    cdef int top = -1, k, d, i, j, start, lo_start, rows, cols, pos
    cdef int* offs = NULL
    cdef int* ranks = NULL
    cdef int64_t* mat = NULL
    cdef uint64_t* bits = NULL
    cdef int words
    cdef uint64_t f, x, low
    cdef int64_t sign
    try:
        for k in range(nf):
            fa[k] = <uint64_t> ordered[k]
        top = _popcount(fa[nf - 1]) - 1
        # offs[d + 1] .. offs[d + 2] is the slice of faces of dimension d
        offs = <int*> calloc(top + 3, sizeof(int))
        ranks = <int*> calloc(top + 3, sizeof(int))
        for k in range(nf):
            offs[_popcount(fa[k]) + 1] += 1
        for d in range(1, top + 3):
            offs[d] += offs[d - 1]
        for d in range(0, top + 1):
            start = offs[d + 1]
            rows = offs[d + 2] - start
            lo_start = offs[d]
            cols = start - lo_start
            if rows == 0 or cols == 0:
                continue
            if p == 2:
                words = (cols + 63) >> 6
                bits = <uint64_t*> calloc(rows * words, sizeof(uint64_t))
                for i in range(rows):
                    f = fa[start + i]
                    x = f
                    while x:
                        low = x & (~x + 1)
                        pos = _find(fa, lo_start, start, f ^ low) - lo_start
                        bits[i * words + (pos >> 6)] |= (<uint64_t> 1) << (pos & 63)
                        x ^= low
                ranks[d + 1] = _rank_gf2(bits, rows, words)
                free(bits)
                bits = NULL
                continue
            mat = <int64_t*> calloc(rows * cols, sizeof(int64_t))
            for i in range(rows):
                f = fa[start + i]
                x = f
                sign = 1
                while x:
                    low = x & (~x + 1)
                    pos = _find(fa, lo_start, start, f ^ low) - lo_start
                    mat[i * cols + pos] = 1 if sign == 1 else p - 1
                    sign = -sign
                    x ^= low
            ranks[d + 1] = _rank_dense(mat, rows, cols, p)
            free(mat)
            mat = NULL
        out = []
        for d in range(-1, top + 1):
            out.append((offs[d + 2] - offs[d + 1]) - ranks[d + 1] - (ranks[d + 2] if d + 2 <= top + 1 else 0))
        return out
    finally:
        free(fa)
        if offs != NULL:
            free(offs)
        if ranks != NULL:
            free(ranks)
        if mat != NULL:
            free(mat)
        if bits != NULL:
            free(bits)
