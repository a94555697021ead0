# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the freeness oracle and fiber products."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def scan_product(const i64[:] r1, const i64[:] r2, const i64[:] r3, i64 one):
    cdef Py_ssize_t i, j, k
    cdef Py_ssize_t n1 = r1.shape[0], n2 = r2.shape[0], n3 = r3.shape[0]
    cdef i64 v
    for i in range(n1):
        v = r1[i]
        if v == one:
            continue
        for j in range(n2):
            if r2[j] != v:
                continue
            for k in range(n3):
                if r3[k] == v:
                    return i, j, k
    return -1, -1, -1


def scan_pairs(const i64[:] pa, const i64[:] pb, const i64[:] rd, i64 one):
    cdef Py_ssize_t i, k
    cdef Py_ssize_t n = pa.shape[0], nd = rd.shape[0]
    cdef i64 v
    for i in range(n):
        v = pa[i]
        if v == one or pb[i] != v:
            continue
        for k in range(nd):
            if rd[k] == v:
                return i, k
    return -1, -1


def scan_triples(const i64[:] ra, const i64[:] rb, const i64[:] rc, i64 one):
    cdef Py_ssize_t i, n = ra.shape[0]
    for i in range(n):
        if ra[i] != one and ra[i] == rb[i] and rb[i] == rc[i]:
            return i
    return -1


def fiber_pairs(const i64[:] fa, const i64[:] fb, Py_ssize_t nf):
    cdef Py_ssize_t i, j, t, na = fa.shape[0], nb = fb.shape[0], total = 0
    cdef i64[:] count = np.zeros(nf + 1, dtype=np.int64)
    cdef i64[:] order = np.empty(nb, dtype=np.int64)
    cdef i64[:] fill
    for j in range(nb):
        count[fb[j] + 1] += 1
    for t in range(nf):
        count[t + 1] += count[t]
    fill = np.array(count, dtype=np.int64)
    for j in range(nb):
        order[fill[fb[j]]] = j
        fill[fb[j]] += 1
    for i in range(na):
        total += count[fa[i] + 1] - count[fa[i]]
    ia_arr = np.empty(total, dtype=np.int64)
    ib_arr = np.empty(total, dtype=np.int64)
    cdef i64[:] ia = ia_arr
    cdef i64[:] ib = ib_arr
    cdef Py_ssize_t pos = 0
    for i in range(na):
        for t in range(count[fa[i]], count[fa[i] + 1]):
            ia[pos] = i
            ib[pos] = order[t]
            pos += 1
    return ia_arr, ib_arr
