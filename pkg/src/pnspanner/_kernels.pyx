# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for float metric spaces.

Same block API as `_kernels_py` (the import-time fallback); see that module
for the contracts. Hot loops run without the GIL so source chunks can be
spread across threads.
"""

import numpy as np

cimport cython
from libc.math cimport INFINITY as C_INF


cdef Py_ssize_t _hsp_one(const double[:, ::1] D, Py_ssize_t u,
                         unsigned char[::1] allowed, long long[::1] nbrs) noexcept nogil:
    cdef Py_ssize_t n = D.shape[0]
    cdef Py_ssize_t z, w, count = 0
    cdef Py_ssize_t remaining = n - 1
    cdef double best
    for z in range(n):
        allowed[z] = 1
    allowed[u] = 0
    while remaining > 0:
        w = -1
        best = C_INF
        for z in range(n):
            if allowed[z] and D[u, z] < best:
                w = z
                best = D[u, z]
        nbrs[count] = w
        count += 1
        for z in range(n):
            if allowed[z] and D[w, z] < D[u, z]:
                allowed[z] = 0
                remaining -= 1
    return count


def hsp_source_block(const double[:, ::1] D, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t n = D.shape[0]
    allowed_arr = np.empty(n, dtype=np.uint8)
    scratch_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef unsigned char[::1] allowed = allowed_arr
    cdef long long[::1] scratch = scratch_arr
    cdef Py_ssize_t u, count
    out = []
    for u in range(lo, hi):
        with nogil:
            count = _hsp_one(D, u, allowed, scratch)
        out.append(scratch_arr[:count].copy())
    return out


def pn_first_violation(const double[:, ::1] D, const long long[::1] indptr,
                       const long long[::1] indices, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t n = D.shape[0]
    cdef Py_ssize_t u, v, k
    cdef bint ok
    cdef Py_ssize_t bad_u = -1, bad_v = -1
    with nogil:
        for u in range(lo, hi):
            for v in range(n):
                if v == u:
                    continue
                ok = False
                for k in range(indptr[u], indptr[u + 1]):
                    if D[indices[k], v] < D[u, v]:
                        ok = True
                        break
                if not ok:
                    bad_u = u
                    bad_v = v
                    break
            if bad_u >= 0:
                break
    if bad_u >= 0:
        return bad_u, bad_v
    return None


def lune_first_violation(const double[:, ::1] D, const long long[::1] indptr,
                         const long long[::1] indices, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t n = D.shape[0]
    cdef Py_ssize_t u, v, k, z
    cdef bint witnessed, adjacent
    cdef double duv
    cdef Py_ssize_t bad_u = -1, bad_v = -1
    with nogil:
        for u in range(lo, hi):
            for v in range(n):
                if v == u:
                    continue
                duv = D[u, v]
                adjacent = False
                for k in range(indptr[u], indptr[u + 1]):
                    if indices[k] == v:
                        adjacent = True
                        break
                if adjacent:
                    continue
                witnessed = False
                for k in range(indptr[u], indptr[u + 1]):
                    z = indices[k]
                    if D[u, z] < duv and D[z, v] < duv:
                        witnessed = True
                        break
                if not witnessed:
                    bad_u = u
                    bad_v = v
                    break
            if bad_u >= 0:
                break
    if bad_u >= 0:
        return bad_u, bad_v
    return None


def greedy_block(const double[:, ::1] D, const long long[::1] indptr,
                 const long long[::1] indices, Py_ssize_t lo, Py_ssize_t hi,
                 unsigned char[:, ::1] reached, long long[:, ::1] hops,
                 double[:, ::1] totals):
    cdef Py_ssize_t n = D.shape[0]
    cdef Py_ssize_t u, v, k, cur, best_w, w
    cdef double dcur, best_d, dw, tot, bound
    cdef long long h
    cdef long long violations = 0
    with nogil:
        for u in range(lo, hi):
            for v in range(n):
                if v == u:
                    reached[u, v] = 1
                    hops[u, v] = 0
                    totals[u, v] = 0.0
                    continue
                bound = D[u, v]
                cur = u
                dcur = bound
                h = 0
                tot = 0.0
                reached[u, v] = 0
                while True:
                    best_w = -1
                    best_d = C_INF
                    for k in range(indptr[cur], indptr[cur + 1]):
                        w = indices[k]
                        dw = D[w, v]
                        if dw < best_d:
                            best_w = w
                            best_d = dw
                    if best_w < 0 or best_d >= dcur:
                        break  # local minimum
                    if best_d > bound:
                        violations += 1
                    tot += D[cur, best_w]
                    cur = best_w
                    dcur = best_d
                    h += 1
                    if cur == v:
                        reached[u, v] = 1
                        break
                hops[u, v] = h
                totals[u, v] = tot
    return int(violations)
