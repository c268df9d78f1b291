# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scans over a dense 0/1 orientation matrix.

Every routine takes the adjacency matrix as a C-contiguous uint8 array and
vertex index arrays as int64; results match ``_kernels_py`` exactly.
"""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t idx_t


def row_counts(const unsigned char[:, ::1] adj, const idx_t[::1] rows,
               const idx_t[::1] cols):
    cdef Py_ssize_t i, j, nr = rows.shape[0], nc = cols.shape[0]
    cdef idx_t acc
    cdef const unsigned char* row
    out = np.zeros(nr, dtype=np.int64)
    cdef idx_t[::1] o = out
    for i in range(nr):
        row = &adj[rows[i], 0]
        acc = 0
        for j in range(nc):
            acc += row[cols[j]]
        o[i] = acc
    return out


def col_counts(const unsigned char[:, ::1] adj, const idx_t[::1] rows,
               const idx_t[::1] cols):
    cdef Py_ssize_t i, j, nr = rows.shape[0], nc = cols.shape[0]
    cdef const unsigned char* row
    out = np.zeros(nc, dtype=np.int64)
    cdef idx_t[::1] o = out
    for i in range(nr):
        row = &adj[rows[i], 0]
        for j in range(nc):
            o[j] += row[cols[j]]
    return out


def edge_count(const unsigned char[:, ::1] adj, const idx_t[::1] rows,
               const idx_t[::1] cols):
    cdef Py_ssize_t i, j, nr = rows.shape[0], nc = cols.shape[0]
    cdef long long acc = 0
    cdef const unsigned char* row
    for i in range(nr):
        row = &adj[rows[i], 0]
        for j in range(nc):
            acc += row[cols[j]]
    return acc


def first_edge(const unsigned char[:, ::1] adj, const idx_t[::1] rows,
               const idx_t[::1] cols):
    cdef Py_ssize_t i, j, nr = rows.shape[0], nc = cols.shape[0]
    cdef const unsigned char* row
    for i in range(nr):
        row = &adj[rows[i], 0]
        for j in range(nc):
            if row[cols[j]]:
                return i, j
    return -1, -1


def select_out(const unsigned char[:, ::1] adj, idx_t v, const idx_t[::1] cols,
               bint out):
    """Members of ``cols`` that ``v`` beats (``out``) or that beat ``v``."""
    cdef Py_ssize_t j, nc = cols.shape[0], k = 0
    cdef unsigned char want = 1 if out else 0
    cdef const unsigned char* row = &adj[v, 0]
    res = np.empty(nc, dtype=np.int64)
    cdef idx_t[::1] r = res
    for j in range(nc):
        if cols[j] != v and row[cols[j]] == want:
            r[k] = cols[j]
            k += 1
    return res[:k]
