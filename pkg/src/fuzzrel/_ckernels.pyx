# cython: language_level=3
"""Compiled implementations of the hot kernels.

Mirrors ``_kernels_py`` exactly: sup-* composition, transitive-closure
fixpoint, transitivity check, and the pruned path-consistency search.

t-norm codes: 0 = godel, 1 = lukasiewicz, 2 = product.
"""

import numpy as np

GODEL = 0
LUKASIEWICZ = 1
PRODUCT = 2


cdef inline double _conj(int code, double a, double b) nogil:
    cdef double s
    if code == 0:
        return a if a < b else b
    if code == 1:
        # exact at the unit: a + 1.0 - 1.0 can drop or gain an ulp
        if a == 1.0:
            return b
        if b == 1.0:
            return a
        s = a + b - 1.0
        return s if s > 0.0 else 0.0
    return a * b


cdef inline double _resid(int code, double a, double b) nogil:
    if a <= b:
        return 1.0
    if code == 1:
        return 1.0 - a + b
    if code == 0:
        return b
    # product: a > b >= 0 implies a > 0
    return b / a


def sup_compose(mat, int code):
    """Sup-* composition: out[i, j] = max_k mat[i, k] * mat[k, j]."""
    arr = np.ascontiguousarray(mat, dtype=np.float64)
    cdef const double[:, ::1] a = arr
    cdef Py_ssize_t n = a.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef Py_ssize_t i, j, k
    cdef double best, v
    with nogil:
        for i in range(n):
            for j in range(n):
                best = 0.0
                for k in range(n):
                    v = _conj(code, a[i, k], a[k, j])
                    if v > best:
                        best = v
                o[i, j] = best
    return out


def transitive_closure_matrix(mat, int code, int max_iter):
    """Iterate q <- q | (q o q) to the least fixpoint.

    Returns (closure, converged); exact entry equality detects the fixpoint,
    max_iter caps the number of composition steps.
    """
    cur = np.array(mat, dtype=np.float64, order="C")
    nxt = np.empty_like(cur)
    cdef double[:, ::1] a = cur
    cdef double[:, ::1] b = nxt
    cdef double[:, ::1] swp
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, j, k
    cdef double best, v
    cdef bint changed
    cdef int it
    for it in range(max_iter):
        changed = False
        with nogil:
            for i in range(n):
                for j in range(n):
                    best = a[i, j]
                    for k in range(n):
                        v = _conj(code, a[i, k], a[k, j])
                        if v > best:
                            best = v
                    b[i, j] = best
                    if best != a[i, j]:
                        changed = True
        if not changed:
            return cur, True
        swp = a
        a = b
        b = swp
        cur, nxt = nxt, cur
    return cur, False


def is_transitive_matrix(mat, int code, double eps):
    """True iff mat[i, j] * mat[j, k] <= mat[i, k] + eps for all triples."""
    arr = np.ascontiguousarray(mat, dtype=np.float64)
    cdef const double[:, ::1] m = arr
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t i, j, k
    cdef bint ok = True
    with nogil:
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if _conj(code, m[i, j], m[j, k]) > m[i, k] + eps:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
    return bool(ok)


def path_consistency_violation(mat, int code, double eps, int max_len):
    """First pair (x, y) with a path value above residuum(mat[x,y], mat[y,x]) + eps,
    scanning pairs row-major; None when none exists.

    DFS over intermediate sequences of length 1..max_len, pruning prefixes whose
    value is already within the bound (a *-product cannot grow by appending
    factors).
    """
    arr = np.ascontiguousarray(mat, dtype=np.float64)
    cdef const double[:, ::1] m = arr
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t cap = n * (max_len + 1) + 8
    last_arr = np.empty(cap, dtype=np.intp)
    val_arr = np.empty(cap, dtype=np.float64)
    len_arr = np.empty(cap, dtype=np.intp)
    cdef Py_ssize_t[::1] last = last_arr
    cdef double[::1] val = val_arr
    cdef Py_ssize_t[::1] length = len_arr
    cdef Py_ssize_t x, y, t, u, top, depth, vx = 0, vy = 0
    cdef double bound, v, nv
    cdef bint found = False
    with nogil:
        for x in range(n):
            if found:
                break
            for y in range(n):
                bound = _resid(code, m[x, y], m[y, x]) + eps
                if bound >= 1.0:
                    continue
                top = 0
                for t in range(n):
                    v = m[y, t]
                    if v > bound:
                        last[top] = t
                        val[top] = v
                        length[top] = 1
                        top += 1
                while top > 0:
                    top -= 1
                    t = last[top]
                    v = val[top]
                    depth = length[top]
                    if _conj(code, v, m[t, x]) > bound:
                        found = True
                        vx = x
                        vy = y
                        break
                    if depth < max_len:
                        for u in range(n):
                            nv = _conj(code, v, m[t, u])
                            if nv > bound:
                                last[top] = u
                                val[top] = nv
                                length[top] = depth + 1
                                top += 1
                if found:
                    break
    if found:
        return (int(vx), int(vy))
    return None
