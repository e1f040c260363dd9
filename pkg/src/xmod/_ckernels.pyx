# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled tuple-level kernels; same contract as ``xmod._kernels_py``."""

import numpy as np

NAME = "cython"

ctypedef long long i64

DEF MAXDIG = 64


def bar_mul(const i64[::1] x, const i64[::1] y, const i64[:, ::1] hmul,
            const i64[:, ::1] nmul, const i64[:, ::1] act, const i64[::1] phi,
            i64 hord, i64 q, int m):
    cdef Py_ssize_t n = x.shape[0], e
    cdef i64 xr, yr, t, a, b, c, out, scale
    cdef int j
    res = np.empty(n, dtype=np.int64)
    cdef i64[::1] r = res
    for e in range(n):
        xr = x[e]
        yr = y[e]
        t = yr % hord
        out = hmul[xr % hord, t]
        xr //= hord
        yr //= hord
        scale = hord
        for j in range(m):
            a = xr % q
            b = yr % q
            xr //= q
            yr //= q
            c = nmul[act[a, t], b]
            t = hmul[t, phi[b]]
            out += c * scale
            scale *= q
        r[e] = out
    return res


def coord_act(const i64[::1] x, const i64[::1] g, const i64[:, ::1] act,
              i64 q, int ncoords):
    cdef Py_ssize_t n = x.shape[0], e
    cdef i64 rest, out, scale, gg
    cdef int j
    res = np.empty(n, dtype=np.int64)
    cdef i64[::1] r = res
    for e in range(n):
        rest = x[e]
        gg = g[e]
        out = 0
        scale = 1
        for j in range(ncoords):
            out += act[rest % q, gg] * scale
            rest //= q
            scale *= q
        r[e] = out
    return res


cdef inline int _split(i64 v, i64 hord, i64 q, int m, i64* d) nogil:
    cdef int j
    d[0] = v % hord
    v //= hord
    for j in range(1, m + 1):
        d[j] = v % q
        v //= q
    return 0


cdef inline i64 _join(i64* d, int m, i64 hord, i64 q) nogil:
    cdef i64 out = 0
    cdef int j
    for j in range(m, 0, -1):
        out = out * q + d[j]
    return out * hord + d[0]


def bar_face(const i64[::1] x, int i, const i64[:, ::1] hmul,
             const i64[:, ::1] nmul, const i64[::1] phi,
             i64 hord, i64 q, int m):
    if m + 1 > MAXDIG:
        raise ValueError("too many digits")
    cdef Py_ssize_t n = x.shape[0], e
    cdef i64 d[MAXDIG]
    cdef int j
    res = np.empty(n, dtype=np.int64)
    cdef i64[::1] r = res
    for e in range(n):
        _split(x[e], hord, q, m, d)
        if i == m:
            pass
        elif i == 0:
            d[0] = hmul[d[0], phi[d[1]]]
            for j in range(1, m):
                d[j] = d[j + 1]
        else:
            d[i] = nmul[d[i], d[i + 1]]
            for j in range(i + 1, m):
                d[j] = d[j + 1]
        r[e] = _join(d, m - 1, hord, q)
    return res


def bar_degen(const i64[::1] x, int i, i64 nid, i64 hord, i64 q, int m):
    if m + 2 > MAXDIG:
        raise ValueError("too many digits")
    cdef Py_ssize_t n = x.shape[0], e
    cdef i64 d[MAXDIG]
    cdef int j
    res = np.empty(n, dtype=np.int64)
    cdef i64[::1] r = res
    for e in range(n):
        _split(x[e], hord, q, m, d)
        for j in range(m + 1, i + 1, -1):
            d[j] = d[j - 1]
        d[i + 1] = nid
        r[e] = _join(d, m + 1, hord, q)
    return res


def assoc_witness(const i64[:, ::1] table):
    cdef Py_ssize_t n = table.shape[0], x, y, z
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x, y], z] != table[x, table[y, z]]:
                    return (int(x), int(y), int(z))
    return None
