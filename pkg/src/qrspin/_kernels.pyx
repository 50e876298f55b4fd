# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled wedge kernels; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, free


cdef inline bint _occ(long p, long* head, int ell):
    cdef int k
    if p <= -ell:
        return True
    for k in range(ell):
        if head[k] == p:
            return True
    return False


cdef tuple _to_parts(long* pos, int n):
    cdef int k
    cdef long v
    out = []
    for k in range(n):
        v = pos[k] + k
        if v <= 0:
            break
        out.append(v)
    return tuple(out)


cdef void _insert_desc(long* buf, int n, int skip, long val, long* out):
    # copy buf without index `skip`, insert val keeping decreasing order
    cdef int i, j = 0
    cdef bint placed = False
    for i in range(n):
        if i == skip:
            continue
        if not placed and val > buf[i]:
            out[j] = val
            j += 1
            placed = True
        out[j] = buf[i]
        j += 1
    if not placed:
        out[j] = val


def positions(parts, int count):
    cdef int n = len(parts)
    return [(parts[k] if k < n else 0) - k for k in range(count)]


def move(parts, long src, long dst):
    cdef int ell = len(parts)
    cdef int width = ell + <int>abs(src - dst) + 1
    cdef long* pos = <long*>malloc(width * sizeof(long))
    cdef long* tmp = <long*>malloc(width * sizeof(long))
    cdef int k, idx = -1, between = 0
    cdef long x, lo, hi
    try:
        for k in range(width):
            pos[k] = (parts[k] if k < ell else 0) - k
            if pos[k] == src:
                idx = k
        if idx < 0 or _occ(dst, pos, ell):
            return None
        lo = dst if dst < src else src
        hi = src if dst < src else dst
        for x in range(lo + 1, hi):
            if _occ(x, pos, ell):
                between += 1
        _insert_desc(pos, width, idx, dst, tmp)
        return _to_parts(tmp, width), (-1 if between & 1 else 1)
    finally:
        free(pos)
        free(tmp)


def band_moves(parts, long a):
    cdef int ell = len(parts)
    cdef int width = ell + <int>abs(a)
    cdef long* pos = <long*>malloc((width + 1) * sizeof(long))
    cdef long* tmp = <long*>malloc((width + 1) * sizeof(long))
    cdef int k, between
    cdef long src, dst, lo, hi, x
    out = []
    try:
        for k in range(width + 1):
            pos[k] = (parts[k] if k < ell else 0) - k
        for k in range(width):
            src = pos[k]
            dst = src - a
            if _occ(dst, pos, ell):
                continue
            lo = dst if dst < src else src
            hi = src if dst < src else dst
            between = 0
            for x in range(lo + 1, hi):
                if _occ(x, pos, ell):
                    between += 1
            _insert_desc(pos, width + 1, k, dst, tmp)
            out.append((_to_parts(tmp, width + 1), -1 if between & 1 else 1, src))
        return out
    finally:
        free(pos)
        free(tmp)


def diagonal_support(parts):
    cdef int ell = len(parts)
    cdef int k
    cdef long p
    pos = [parts[k] - k for k in range(ell)]
    plus = [p for p in pos if p >= 1]
    head = set(pos)
    minus = [p for p in range(1 - ell, 1) if p not in head]
    return plus, minus


def fn_eigen_scaled(parts, n):
    cdef Py_ssize_t k
    cdef object total = 0, kk, lam, e = int(n)
    for k in range(len(parts)):
        kk = k + 1
        lam = parts[k]
        total += (2 * lam - 2 * kk + 1) ** e - (1 - 2 * kk) ** e
    return total


def hook_position(parts):
    cdef int ell = len(parts)
    cdef int k
    if ell == 0:
        return None
    for k in range(1, ell):
        if parts[k] != 1:
            return None
    return 1 - ell, parts[0], (-1 if (ell - 1) & 1 else 1)
