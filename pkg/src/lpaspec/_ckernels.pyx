# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; drop-in for ``_pykernels`` on graphs of at most 64 vertices."""

from libc.stdint cimport uint64_t

DEF MAXV = 64


cdef int _load(object src, uint64_t* dst) except -1:
    cdef Py_ssize_t i, n = len(src)
    if n > MAXV:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(n):
        dst[i] = <uint64_t>src[i]
    return <int>n


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _lowbit(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef bint _hereditary(const uint64_t* reach, int n, uint64_t mask) nogil:
    cdef uint64_t m = mask
    cdef int v
    while m:
        v = _lowbit(m)
        m &= m - 1
        if reach[v] & ~mask:
            return False
    return True


cdef bint _saturated(const uint64_t* succ, int n, uint64_t mask) nogil:
    cdef int v
    cdef uint64_t out
    for v in range(n):
        out = succ[v]
        if out and not (mask >> v) & 1 and not (out & ~mask):
            return False
    return True


def reach_masks(succ):
    cdef uint64_t s[MAXV]
    cdef int n = _load(succ, s)
    cdef int v, u
    cdef uint64_t seen, frontier, new
    out = []
    for v in range(n):
        seen = (<uint64_t>1) << v
        frontier = seen
        while frontier:
            u = _lowbit(frontier)
            frontier &= frontier - 1
            new = s[u] & ~seen
            seen |= new
            frontier |= new
        out.append(seen)
    return out


def is_hereditary(reach, mask):
    cdef uint64_t r[MAXV]
    cdef int n = _load(reach, r)
    return _hereditary(r, n, <uint64_t>mask)


def is_saturated(succ, mask):
    cdef uint64_t s[MAXV]
    cdef int n = _load(succ, s)
    return _saturated(s, n, <uint64_t>mask)


def closure_stages(succ, reach, x):
    cdef uint64_t s[MAXV]
    cdef uint64_t r[MAXV]
    cdef int n = _load(succ, s)
    _load(reach, r)
    cdef uint64_t m = <uint64_t>x
    cdef uint64_t level = 0, grown
    cdef int v
    while m:
        v = _lowbit(m)
        m &= m - 1
        level |= r[v]
    stages = [level]
    while True:
        grown = level
        for v in range(n):
            if s[v] and not (s[v] & ~level):
                grown |= (<uint64_t>1) << v
        if grown == level:
            return stages
        level = grown
        stages.append(level)


def enumerate_hsat(succ, reach):
    cdef uint64_t s[MAXV]
    cdef uint64_t r[MAXV]
    cdef int n = _load(succ, s)
    _load(reach, r)
    if n > 40:
        raise ValueError("exhaustive enumeration above 40 vertices is not supported")
    cdef uint64_t mask, top = (<uint64_t>1) << n
    found = []
    for mask in range(top):
        if _hereditary(r, n, mask) and _saturated(s, n, mask):
            found.append(mask)
    return found
