# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels.

Same API as :mod:`udcodes._kernels_py`; :mod:`udcodes.kernels` picks one
at import time.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

IMPLEMENTATION = "cython"

cdef int64_t EMPTY = -(2**62)


cdef inline uint64_t _mix(uint64_t x) noexcept nogil:
    # splitmix64 finaliser
    x ^= x >> 30
    x *= 0xbf58476d1ce4e5b9ULL
    x ^= x >> 27
    x *= 0x94d049bb133111ebULL
    x ^= x >> 31
    return x


cdef class _Odometer:
    """Row-major walk over the tuple product, last user fastest."""
    cdef int T
    cdef int64_t** keys
    cdef int64_t* sizes
    cdef int64_t* idx
    cdef int64_t* partial
    cdef list _hold

    def __cinit__(self, list user_keys):
        cdef int t
        self.T = len(user_keys)
        self._hold = [np.ascontiguousarray(k, dtype=np.int64) for k in user_keys]
        self.keys = <int64_t**> malloc(self.T * sizeof(int64_t*))
        self.sizes = <int64_t*> malloc(self.T * sizeof(int64_t))
        self.idx = <int64_t*> malloc(self.T * sizeof(int64_t))
        self.partial = <int64_t*> malloc((self.T + 1) * sizeof(int64_t))
        cdef cnp.int64_t[::1] view
        for t in range(self.T):
            view = self._hold[t]
            self.keys[t] = &view[0]
            self.sizes[t] = view.shape[0]
            self.idx[t] = 0
        self.partial[0] = 0
        for t in range(self.T):
            self.partial[t + 1] = self.partial[t] + self.keys[t][0]

    def __dealloc__(self):
        free(self.keys)
        free(self.sizes)
        free(self.idx)
        free(self.partial)

    cdef inline int64_t current(self) noexcept nogil:
        return self.partial[self.T]

    cdef inline void advance(self) noexcept nogil:
        cdef int t = self.T - 1
        while t >= 0:
            self.idx[t] += 1
            if self.idx[t] < self.sizes[t]:
                break
            self.idx[t] = 0
            t -= 1
        if t < 0:
            t = 0
        while t < self.T:
            self.partial[t + 1] = self.partial[t] + self.keys[t][self.idx[t]]
            t += 1


def _total(list user_keys):
    cdef int64_t total = 1
    for k in user_keys:
        total *= len(k)
    return total


def tuple_sum_keys(user_keys):
    """Sum keys of every tuple in row-major order (last user varies fastest)."""
    user_keys = list(user_keys)
    cdef int64_t total = _total(user_keys)
    out = np.empty(total, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    cdef _Odometer odo = _Odometer(user_keys)
    cdef int64_t i
    with nogil:
        for i in range(total):
            o[i] = odo.current()
            odo.advance()
    return out


def find_collision(user_keys):
    """Flat indices ``(i, j)``, i < j, of the first two tuples with equal sum key.

    Returns None when all sums are distinct. Open-addressing hash set with
    early exit; memory is one int64 slot per table entry.
    """
    user_keys = list(user_keys)
    cdef int64_t total = _total(user_keys)
    cdef int64_t cap = 1
    while cap < 2 * total:
        cap <<= 1
    cdef uint64_t mask = cap - 1
    table = np.full(cap, EMPTY, dtype=np.int64)
    cdef cnp.int64_t[::1] tab = table
    cdef _Odometer odo = _Odometer(user_keys)
    cdef int64_t i, key, hit = -1
    cdef uint64_t h
    with nogil:
        for i in range(total):
            key = odo.current()
            h = _mix(<uint64_t> key) & mask
            while tab[h] != EMPTY and tab[h] != key:
                h = (h + 1) & mask
            if tab[h] == key:
                hit = i
                break
            tab[h] = key
            odo.advance()
    if hit < 0:
        return None
    cdef int64_t target = key
    cdef int64_t first = -1
    odo = _Odometer(user_keys)
    with nogil:
        for i in range(hit):
            if odo.current() == target:
                first = i
                break
            odo.advance()
    return int(first), int(hit)


def min_l1_pairwise(points):
    """Minimum L1 distance over distinct row pairs; stops early at 0."""
    cdef cnp.int64_t[:, ::1] p = np.ascontiguousarray(points, dtype=np.int64)
    cdef Py_ssize_t N = p.shape[0], n = p.shape[1]
    cdef Py_ssize_t a, b, c
    cdef int64_t best = -1, d, diff
    if N < 2:
        raise ValueError("need at least two points")
    with nogil:
        for a in range(N):
            for b in range(a + 1, N):
                d = 0
                for c in range(n):
                    diff = p[a, c] - p[b, c]
                    d += diff if diff >= 0 else -diff
                    if best >= 0 and d >= best:
                        break
                if best < 0 or d < best:
                    best = d
                    if best == 0:
                        break
            if best == 0:
                break
    return int(best)
