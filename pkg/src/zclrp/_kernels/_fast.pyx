# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels (twin of ``pure.py``; identical contracts).

Bit vectors cross the boundary as Python ints and are unpacked into uint64
words (little-endian platforms assumed; the build is optional and the pure
kernel is always available).  Buffers are allocated per call, so concurrent
use from multiple threads is safe.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.stdint cimport uint64_t
from libc.string cimport memcpy, memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

BACKEND_NAME = "compiled"


cdef uint64_t* _alloc(Py_ssize_t words) except NULL:
    cdef uint64_t* buf = <uint64_t*> PyMem_Malloc(words * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _set_run(uint64_t* buf, Py_ssize_t start, Py_ssize_t length) noexcept nogil:
    # Set bits [start, start + length).
    cdef Py_ssize_t end = start + length
    cdef Py_ssize_t w, span
    cdef int off
    while start < end:
        w = start >> 6
        off = start & 63
        span = end - start
        if span > 64 - off:
            span = 64 - off
        if span == 64:
            buf[w] = <uint64_t> 0 - 1
        else:
            buf[w] |= ((<uint64_t> 1 << span) - 1) << off
        start += span


cdef bytes _to_bytes(object value, Py_ssize_t nbytes):
    return value.to_bytes(nbytes, "little")


cdef class RingKernel:
    """Product and squaring in F2[x_1..x_s]/(x_i^(m+1)); see the pure twin
    for the mask/shift algorithm description."""

    cdef public int m, s
    cdef public object size          # Python int, may exceed C int on purpose
    cdef Py_ssize_t csize, words, nbytes
    cdef uint64_t* masks             # (i*(m+1) + c) * words
    cdef uint64_t* square_mask

    def __cinit__(self, int m, int s):
        cdef Py_ssize_t size = 1
        cdef int i, c
        for i in range(s):
            size *= m + 1
        self.m = m
        self.s = s
        self.csize = size
        self.size = size
        self.words = (size + 63) >> 6
        self.nbytes = self.words * 8
        self.masks = NULL
        self.square_mask = NULL

        cdef Py_ssize_t radix = m + 1
        cdef Py_ssize_t block, period, start, wj
        self.masks = _alloc(radix * s * self.words)
        memset(self.masks, 0, radix * s * self.words * sizeof(uint64_t))
        cdef uint64_t* row
        block = 1
        for i in range(s):
            period = block * radix
            for c in range(radix):
                row = self.masks + (i * radix + c) * self.words
                start = 0
                while start < size:
                    _set_run(row, start, (c + 1) * block)
                    start += period
            block = period

        self.square_mask = _alloc(self.words)
        memcpy(self.square_mask, self.masks + ((m // 2) * self.words),
               self.words * sizeof(uint64_t))
        for i in range(1, s):
            row = self.masks + (i * radix + m // 2) * self.words
            for wj in range(self.words):
                self.square_mask[wj] &= row[wj]

    def __dealloc__(self):
        if self.masks != NULL:
            PyMem_Free(self.masks)
        if self.square_mask != NULL:
            PyMem_Free(self.square_mask)

    def mul(self, a, b):
        cdef bytes ab = _to_bytes(a, self.nbytes)
        cdef bytes bb = _to_bytes(b, self.nbytes)
        cdef Py_ssize_t words = self.words
        cdef uint64_t* wa = _alloc(3 * words + 1)
        cdef uint64_t* wb = wa + words
        cdef uint64_t* acc = wb + words
        cdef const uint64_t** sel = NULL
        cdef const unsigned char* pa = ab
        cdef const unsigned char* pb = bb
        memcpy(wa, pa, self.nbytes)
        memcpy(wb, pb, self.nbytes)
        memset(acc, 0, (words + 1) * sizeof(uint64_t))

        cdef Py_ssize_t pca = 0, pcb = 0, wi, wj, base
        cdef uint64_t* tmp
        cdef uint64_t w, v, rest, d
        cdef uint64_t radix = <uint64_t> (self.m + 1)
        cdef int off, tz, i, t, nsel, mm = self.m
        for wi in range(words):
            pca += __builtin_popcountll(wa[wi])
            pcb += __builtin_popcountll(wb[wi])
        if pca > pcb:
            tmp = wa; wa = wb; wb = tmp
        try:
            sel = <const uint64_t**> PyMem_Malloc(self.s * sizeof(uint64_t*))
            if sel == NULL:
                raise MemoryError()
            for wi in range(words):
                w = wa[wi]
                while w:
                    tz = __builtin_ctzll(w)
                    w &= w - 1
                    rest = (<uint64_t> wi << 6) + <uint64_t> tz
                    base = <Py_ssize_t> (rest >> 6)
                    off = <int> (rest & 63)
                    nsel = 0
                    i = 0
                    # digit decomposition of the factor rank
                    v = rest
                    while v:
                        d = v % radix
                        v //= radix
                        if d:
                            sel[nsel] = self.masks + ((i * <int> radix + (mm - <int> d)) * words)
                            nsel += 1
                        i += 1
                    if off:
                        for wj in range(words - base):
                            v = wb[wj]
                            for t in range(nsel):
                                v &= sel[t][wj]
                            if v:
                                acc[base + wj] ^= v << off
                                acc[base + wj + 1] ^= v >> (64 - off)
                    else:
                        for wj in range(words - base):
                            v = wb[wj]
                            for t in range(nsel):
                                v &= sel[t][wj]
                            if v:
                                acc[base + wj] ^= v
            out = (<object> int).from_bytes(
                (<unsigned char*> acc)[:self.nbytes], "little")
        finally:
            if sel != NULL:
                PyMem_Free(sel)
            PyMem_Free(wa if wa < wb else wb)
        return out

    def square(self, a):
        cdef bytes ab = _to_bytes(a, self.nbytes)
        cdef Py_ssize_t words = self.words
        cdef uint64_t* wa = _alloc(2 * words)
        cdef uint64_t* out = wa + words
        cdef const unsigned char* pa = ab
        memcpy(wa, pa, self.nbytes)
        memset(out, 0, words * sizeof(uint64_t))
        cdef Py_ssize_t wi
        cdef uint64_t w, r
        cdef int tz
        try:
            for wi in range(words):
                w = wa[wi] & self.square_mask[wi]
                while w:
                    tz = __builtin_ctzll(w)
                    w &= w - 1
                    r = 2 * ((<uint64_t> wi << 6) + <uint64_t> tz)
                    out[r >> 6] |= <uint64_t> 1 << (r & 63)
            result = (<object> int).from_bytes(
                (<unsigned char*> out)[:self.nbytes], "little")
        finally:
            PyMem_Free(wa)
        return result


def rref(rows, width):
    """Reduced row echelon form over F2; same contract as the pure twin."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t W = (width + 63) >> 6
    if n == 0 or width == 0:
        return []
    cdef uint64_t* buf = _alloc(n * W)
    cdef bytes raw
    cdef const unsigned char* praw
    cdef Py_ssize_t idx, col, rix, wj, rank_ = 0, sel
    cdef int off
    cdef uint64_t bit
    cdef uint64_t* ra
    cdef uint64_t* rb
    try:
        for idx in range(n):
            raw = _to_bytes(rows[idx], W * 8)
            praw = raw
            memcpy(buf + idx * W, praw, W * 8)
        for col in range(width):
            wj = col >> 6
            off = col & 63
            bit = <uint64_t> 1 << off
            sel = -1
            for rix in range(rank_, n):
                if buf[rix * W + wj] & bit:
                    sel = rix
                    break
            if sel < 0:
                continue
            if sel != rank_:
                ra = buf + sel * W
                rb = buf + rank_ * W
                for idx in range(W):
                    ra[idx] ^= rb[idx]
                    rb[idx] ^= ra[idx]
                    ra[idx] ^= rb[idx]
            rb = buf + rank_ * W
            for rix in range(n):
                if rix != rank_ and (buf[rix * W + wj] & bit):
                    ra = buf + rix * W
                    for idx in range(W):
                        ra[idx] ^= rb[idx]
            rank_ += 1
            if rank_ == n:
                break
        out = [(<object> int).from_bytes(
                   (<unsigned char*> (buf + idx * W))[:W * 8], "little")
               for idx in range(rank_)]
    finally:
        PyMem_Free(buf)
    return out
