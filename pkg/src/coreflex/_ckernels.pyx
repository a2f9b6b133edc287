# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels for digraphs on at most 64 vertices.

Same contracts as :mod:`coreflex._pykernels`; callers must not pass more
than ``MAX_VERTICES`` rows.
"""
from libc.stdint cimport uint64_t

MAX_VERTICES = 64

cdef extern from *:
    """
    static inline int cf_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int cf_ctz(unsigned long long x) nogil


cdef inline void _load(list src, uint64_t* dst, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        dst[i] = <uint64_t>src[i]


cdef inline list _store(uint64_t* src, Py_ssize_t n):
    cdef Py_ssize_t i
    return [src[i] for i in range(n)]


cdef inline uint64_t _image(uint64_t* rows, uint64_t mask) nogil:
    cdef uint64_t acc = 0
    while mask:
        acc |= rows[cf_ctz(mask)]
        mask &= mask - 1
    return acc


cdef void _matmul(uint64_t* a, uint64_t* b, uint64_t* out, Py_ssize_t n) nogil:
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = _image(b, a[i])


cdef void _sat_matmul(uint64_t* a1, uint64_t* a2, uint64_t* b1, uint64_t* b2,
                      uint64_t* c1, uint64_t* c2, Py_ssize_t n) nogil:
    cdef Py_ssize_t i
    cdef int w
    cdef uint64_t seen, many, contrib, mask
    for i in range(n):
        seen = 0
        many = 0
        mask = a1[i]
        while mask:
            w = cf_ctz(mask)
            mask &= mask - 1
            contrib = b1[w]
            many |= (seen & contrib) | b2[w]
            if (a2[i] >> w) & 1:
                many |= contrib
            seen |= contrib
        c1[i] = seen
        c2[i] = many


def transpose(list rows, Py_ssize_t n):
    cdef uint64_t r[64]
    cdef uint64_t c[64]
    cdef Py_ssize_t i
    cdef uint64_t mask
    _load(rows, r, n)
    for i in range(n):
        c[i] = 0
    for i in range(n):
        mask = r[i]
        while mask:
            c[cf_ctz(mask)] |= (<uint64_t>1) << i
            mask &= mask - 1
    return _store(c, n)


def bool_matmul(list a, list b):
    cdef Py_ssize_t n = len(a)
    cdef uint64_t x[64]
    cdef uint64_t y[64]
    cdef uint64_t z[64]
    _load(a, x, n)
    _load(b, y, len(b))
    _matmul(x, y, z, n)
    return _store(z, n)


def bool_power(list rows, int k):
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t base[64]
    cdef uint64_t cur[64]
    cdef uint64_t tmp[64]
    cdef int step
    cdef Py_ssize_t i
    _load(rows, base, n)
    _load(rows, cur, n)
    for step in range(k - 1):
        _matmul(cur, base, tmp, n)
        for i in range(n):
            cur[i] = tmp[i]
    return _store(cur, n)


def sat_matmul(list a1, list a2, list b1, list b2):
    cdef Py_ssize_t n = len(a1)
    cdef uint64_t x1[64]
    cdef uint64_t x2[64]
    cdef uint64_t y1[64]
    cdef uint64_t y2[64]
    cdef uint64_t z1[64]
    cdef uint64_t z2[64]
    _load(a1, x1, n)
    _load(a2, x2, n)
    _load(b1, y1, len(b1))
    _load(b2, y2, len(b2))
    _sat_matmul(x1, x2, y1, y2, z1, z2, n)
    return _store(z1, n), _store(z2, n)


def sat_power(list rows, int k):
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t base1[64]
    cdef uint64_t base2[64]
    cdef uint64_t c1[64]
    cdef uint64_t c2[64]
    cdef uint64_t t1[64]
    cdef uint64_t t2[64]
    cdef int step
    cdef Py_ssize_t i
    _load(rows, base1, n)
    for i in range(n):
        base2[i] = 0
        c1[i] = base1[i]
        c2[i] = 0
    for step in range(k - 1):
        _sat_matmul(c1, c2, base1, base2, t1, t2, n)
        for i in range(n):
            c1[i] = t1[i]
            c2[i] = t2[i]
    return _store(c1, n), _store(c2, n)


def image(list rows, mask):
    cdef uint64_t r[64]
    _load(rows, r, len(rows))
    return _image(r, <uint64_t>mask)


cdef inline uint64_t _closure(uint64_t* r, uint64_t* c, uint64_t current) nogil:
    cdef uint64_t nxt
    while True:
        nxt = _image(c, _image(r, current))
        if nxt == current:
            return current
        current = nxt


def closure(list rows, list cols, seed):
    cdef uint64_t r[64]
    cdef uint64_t c[64]
    _load(rows, r, len(rows))
    _load(cols, c, len(cols))
    return _closure(r, c, <uint64_t>seed)


def coreset_labels(list rows, list cols, Py_ssize_t n):
    cdef uint64_t r[64]
    cdef uint64_t c[64]
    cdef int lab[64]
    cdef int trivial = -1
    cdef int count = 0
    cdef Py_ssize_t v, u
    cdef uint64_t members
    _load(rows, r, n)
    _load(cols, c, n)
    for v in range(n):
        lab[v] = -1
    for v in range(n):
        if lab[v] >= 0:
            continue
        if r[v] == 0:
            trivial = count
            for u in range(v, n):
                if r[u] == 0:
                    lab[u] = count
        else:
            members = _closure(r, c, (<uint64_t>1) << v)
            while members:
                lab[cf_ctz(members)] = count
                members &= members - 1
        count += 1
    return [lab[v] for v in range(n)], trivial


def identical_or_disjoint(list rows):
    cdef Py_ssize_t n = len(rows)
    cdef uint64_t r[64]
    cdef uint64_t union = 0
    cdef Py_ssize_t i, j
    cdef bint dup
    _load(rows, r, n)
    for i in range(n):
        if r[i] == 0:
            continue
        dup = False
        for j in range(i):
            if r[j] == r[i]:
                dup = True
                break
        if dup:
            continue
        if union & r[i]:
            return False
        union |= r[i]
    return True
