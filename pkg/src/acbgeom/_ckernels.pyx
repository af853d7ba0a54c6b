# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled frame kernels.

Same contract as ``_pykernels``.  float64 inputs take typed C loops;
anything else (Fraction object arrays) takes compiled object loops.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

_c = np.ascontiguousarray


def koszul(C, g, ginv):
    if C.dtype == np.float64 and g.dtype == np.float64 and ginv.dtype == np.float64:
        return _koszul_f(_c(C), _c(g), _c(ginv))
    return _koszul_o(C, g, ginv)


def riemann(C, G, g):
    if C.dtype == np.float64 and G.dtype == np.float64 and g.dtype == np.float64:
        return _riemann_f(_c(C), _c(G), _c(g))
    return _riemann_o(C, G, g)


def jacobi(C):
    if C.dtype == np.float64:
        return _jacobi_f(_c(C))
    return _jacobi_o(C)


def nabla_endomorphism(G, A):
    if G.dtype == np.float64 and A.dtype == np.float64:
        return _nabla_f(_c(G), _c(A))
    return _nabla_o(G, A)


cdef _koszul_f(const double[:, :, ::1] C, const double[:, ::1] g, const double[:, ::1] ginv):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, l, m
    cdef double s
    low_arr = np.zeros((n, n, n))
    out_arr = np.zeros((n, n, n))
    cdef double[:, :, ::1] low = low_arr
    cdef double[:, :, ::1] out = out_arr
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = 0.0
                for m in range(n):
                    s += C[i, j, m] * g[m, k]
                low[i, j, k] = s
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = 0.0
                for k in range(n):
                    s += (low[i, j, k] + low[k, i, j] + low[k, j, i]) * ginv[k, l]
                out[i, j, l] = 0.5 * s
    return out_arr


cdef _koszul_o(C, g, ginv):
    # Object path: zero factors are skipped, frame arrays are mostly sparse.
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, l, m
    cdef list c = C.tolist(), gm = g.tolist(), gi = ginv.tolist()
    zero = C.flat[0] * 0 if C.size else 0
    low = [[[zero] * n for _ in range(n)] for _ in range(n)]
    out = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for m in range(n):
                a = c[i][j][m]
                if a == 0:
                    continue
                for k in range(n):
                    b = gm[m][k]
                    if b != 0:
                        low[i][j][k] = low[i][j][k] + a * b
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = zero
                for k in range(n):
                    b = gi[k][l]
                    if b == 0:
                        continue
                    a = low[i][j][k] + low[k][i][j] + low[k][j][i]
                    if a != 0:
                        s = s + a * b
                out[i, j, l] = s / 2
    return out


cdef _riemann_f(const double[:, :, ::1] C, const double[:, :, ::1] G, const double[:, ::1] g):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, l, m, p
    cdef double s
    up_arr = np.zeros((n, n, n, n))
    out_arr = np.zeros((n, n, n, n))
    cdef double[:, :, :, ::1] up = up_arr
    cdef double[:, :, :, ::1] out = out_arr
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for p in range(n):
                    s = 0.0
                    for m in range(n):
                        s += G[j, k, m] * G[i, m, p] - G[i, k, m] * G[j, m, p] - C[i, j, m] * G[m, k, p]
                    up[i, j, k, p] = s
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s = 0.0
                    for p in range(n):
                        s += up[i, j, k, p] * g[p, l]
                    out[i, j, k, l] = s
    return out_arr


cdef _riemann_o(C, G, g):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, l, m, p
    cdef list c = C.tolist(), gam = G.tolist(), gm = g.tolist()
    zero = G.flat[0] * 0 if G.size else 0
    out = np.empty((n, n, n, n), dtype=object)
    up = [zero] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for p in range(n):
                    s = zero
                    for m in range(n):
                        a = gam[j][k][m]
                        if a != 0:
                            b = gam[i][m][p]
                            if b != 0:
                                s = s + a * b
                        a = gam[i][k][m]
                        if a != 0:
                            b = gam[j][m][p]
                            if b != 0:
                                s = s - a * b
                        a = c[i][j][m]
                        if a != 0:
                            b = gam[m][k][p]
                            if b != 0:
                                s = s - a * b
                    up[p] = s
                for l in range(n):
                    s = zero
                    for p in range(n):
                        a = up[p]
                        if a != 0:
                            b = gm[p][l]
                            if b != 0:
                                s = s + a * b
                    out[i, j, k, l] = s
    return out


cdef _nabla_f(const double[:, :, ::1] G, const double[:, ::1] A):
    cdef Py_ssize_t n = G.shape[0]
    cdef Py_ssize_t i, j, l, a
    cdef double s
    out_arr = np.zeros((n, n, n))
    cdef double[:, :, ::1] out = out_arr
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = 0.0
                for a in range(n):
                    s += A[a, j] * G[i, a, l] - G[i, j, a] * A[l, a]
                out[i, j, l] = s
    return out_arr


cdef _nabla_o(G, A):
    cdef Py_ssize_t n = G.shape[0]
    cdef Py_ssize_t i, j, l, a
    cdef list gam = G.tolist(), am = A.tolist()
    zero = G.flat[0] * 0 if G.size else 0
    out = np.empty((n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for l in range(n):
                s = zero
                for a in range(n):
                    x = am[a][j]
                    if x != 0:
                        y = gam[i][a][l]
                        if y != 0:
                            s = s + x * y
                    x = gam[i][j][a]
                    if x != 0:
                        y = am[l][a]
                        if y != 0:
                            s = s - x * y
                out[i, j, l] = s
    return out


cdef _jacobi_f(const double[:, :, ::1] C):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, m, p
    cdef double s
    out_arr = np.zeros((n, n, n, n))
    cdef double[:, :, :, ::1] out = out_arr
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = 0.0
                    for p in range(n):
                        s += C[j, k, p] * C[i, p, m] + C[k, i, p] * C[j, p, m] + C[i, j, p] * C[k, p, m]
                    out[i, j, k, m] = s
    return out_arr


cdef _jacobi_o(C):
    cdef Py_ssize_t n = C.shape[0]
    cdef Py_ssize_t i, j, k, m, p, r
    cdef list c = C.tolist()
    zero = C.flat[0] * 0 if C.size else 0
    # inner[i][j][k][m] = [e_i, [e_j, e_k]]_m, built from nonzero factors only
    inner = [[[[zero] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for j in range(n):
        for k in range(n):
            for p in range(n):
                a = c[j][k][p]
                if a == 0:
                    continue
                for i in range(n):
                    for m in range(n):
                        b = c[i][p][m]
                        if b != 0:
                            inner[i][j][k][m] = inner[i][j][k][m] + a * b
    out = np.empty((n, n, n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = zero
                    for term in (inner[i][j][k][m], inner[j][k][i][m], inner[k][i][j][m]):
                        if term != 0:
                            s = s + term
                    out[i, j, k, m] = s
    return out
