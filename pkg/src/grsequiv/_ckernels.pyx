# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels over flat GF(q) operation tables.

Every function takes a ``FieldTables`` (q, add, sub, mul, inv as flat int
arrays) and mirrors the corresponding function in ``_pykernels``.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef int* _flatten(rows, int nrows, int ncols) except NULL:
    cdef int* buf = <int*> malloc(max(nrows * ncols, 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int i, c
    for i in range(nrows):
        row = rows[i]
        if len(row) != ncols:
            free(buf)
            raise ValueError("ragged matrix")
        for c in range(ncols):
            buf[i * ncols + c] = row[c]
    return buf


cdef int* _scaled(const int[::1] mul, int* G, int k, int q, int ncols) except NULL:
    # S[(i*q + s)*ncols + c] = s * G[i][c]
    cdef int* S = <int*> malloc(max(k * q * ncols, 1) * sizeof(int))
    if S == NULL:
        raise MemoryError()
    cdef int i, s, c
    for i in range(k):
        for s in range(q):
            for c in range(ncols):
                S[(i * q + s) * ncols + c] = mul[s * q + G[i * ncols + c]]
    return S


def rref(tables, rows, int ncols):
    cdef int q = tables.q
    cdef const int[::1] sub = tables.sub
    cdef const int[::1] mul = tables.mul
    cdef const int[::1] inv = tables.inv
    cdef int nrows = len(rows)
    cdef int* M = _flatten(rows, nrows, ncols)
    cdef int* tmp = <int*> malloc(max(ncols, 1) * sizeof(int))
    cdef int r = 0, c, i, j, piv, s, f
    try:
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if M[i * ncols + c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                memcpy(tmp, &M[piv * ncols], ncols * sizeof(int))
                memcpy(&M[piv * ncols], &M[r * ncols], ncols * sizeof(int))
                memcpy(&M[r * ncols], tmp, ncols * sizeof(int))
            s = inv[M[r * ncols + c]]
            for j in range(ncols):
                M[r * ncols + j] = mul[s * q + M[r * ncols + j]]
            for i in range(nrows):
                f = M[i * ncols + c]
                if i != r and f != 0:
                    for j in range(ncols):
                        M[i * ncols + j] = sub[M[i * ncols + j] * q + mul[f * q + M[r * ncols + j]]]
            r += 1
        return [[M[i * ncols + j] for j in range(ncols)] for i in range(r)]
    finally:
        free(M)
        free(tmp)


def span(tables, rows, int ncols):
    cdef int q = tables.q
    cdef const int[::1] add = tables.add
    cdef const int[::1] sub = tables.sub
    cdef const int[::1] mul = tables.mul
    cdef int k = len(rows)
    cdef int* G = _flatten(rows, k, ncols)
    cdef int* S = NULL
    cdef int* word = <int*> malloc(max(ncols, 1) * sizeof(int))
    cdef int* digits = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int t, a, b, c
    cdef int* Sa
    cdef int* Sb
    out = set()
    try:
        S = _scaled(mul, G, k, q, ncols)
        for c in range(ncols):
            word[c] = 0
        for t in range(k):
            digits[t] = 0
        while True:
            out.add(tuple([word[c] for c in range(ncols)]))
            t = k - 1
            while t >= 0:
                a = digits[t]
                b = a + 1
                if b == q:
                    b = 0
                Sa = &S[(t * q + a) * ncols]
                Sb = &S[(t * q + b) * ncols]
                for c in range(ncols):
                    word[c] = add[sub[word[c] * q + Sa[c]] * q + Sb[c]]
                digits[t] = b
                if b != 0:
                    break
                t -= 1
            if t < 0:
                break
        return out
    finally:
        free(G)
        free(S)
        free(word)
        free(digits)


def min_weight(tables, rows, int ncols):
    cdef int q = tables.q
    cdef const int[::1] add = tables.add
    cdef const int[::1] sub = tables.sub
    cdef const int[::1] mul = tables.mul
    cdef int k = len(rows)
    cdef int* G = _flatten(rows, k, ncols)
    cdef int* S = NULL
    cdef int* word = <int*> malloc(max(ncols, 1) * sizeof(int))
    cdef int* digits = <int*> malloc(max(k, 1) * sizeof(int))
    cdef int j, t, a, b, c, w
    cdef int best = ncols + 1
    cdef long long scanned = 0
    cdef int* Sa
    cdef int* Sb
    try:
        S = _scaled(mul, G, k, q, ncols)
        for j in range(k):
            # leading nonzero message symbol fixed to 1; the tail runs over all values
            memcpy(word, &S[(j * q + 1) * ncols], ncols * sizeof(int))
            for t in range(k):
                digits[t] = 0
            while True:
                w = 0
                for c in range(ncols):
                    if word[c] != 0:
                        w += 1
                scanned += 1
                if 0 < w < best:
                    best = w
                t = k - 1
                while t > j:
                    a = digits[t]
                    b = a + 1
                    if b == q:
                        b = 0
                    Sa = &S[(t * q + a) * ncols]
                    Sb = &S[(t * q + b) * ncols]
                    for c in range(ncols):
                        word[c] = add[sub[word[c] * q + Sa[c]] * q + Sb[c]]
                    digits[t] = b
                    if b != 0:
                        break
                    t -= 1
                if t == j:
                    break
        return (best if best <= ncols else 0), scanned
    finally:
        free(G)
        free(S)
        free(word)
        free(digits)
