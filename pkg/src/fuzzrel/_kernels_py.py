"""Numpy implementations of the hot kernels.

Fallback backend used when the compiled extension is unavailable (or when
FUZZREL_PURE=1). Semantics must match ``_ckernels`` exactly; the test-suite
cross-checks the two on random inputs.

t-norm codes: 0 = godel, 1 = lukasiewicz, 2 = product.
"""

from __future__ import annotations

import numpy as np

GODEL = 0
LUKASIEWICZ = 1
PRODUCT = 2


def _luk_conj(a, b):
    # exact at the unit: a + 1.0 - 1.0 can drop or gain an ulp
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    return max(a + b - 1.0, 0.0)


def _conj_fn(code):
    if code == GODEL:
        return min
    if code == LUKASIEWICZ:
        return _luk_conj
    return lambda a, b: a * b


def sup_compose(mat, code):
    """Sup-* composition: out[i, j] = max_k mat[i, k] * mat[k, j]."""
    mat = np.asarray(mat, dtype=np.float64)
    a = mat[:, :, None]
    b = mat[None, :, :]
    if code == GODEL:
        paths = np.minimum(a, b)
    elif code == LUKASIEWICZ:
        paths = np.maximum(a + b - 1.0, 0.0)
        paths = np.where(np.equal(a, 1.0), np.broadcast_to(b, paths.shape), paths)
        paths = np.where(np.equal(b, 1.0), np.broadcast_to(a, paths.shape), paths)
    else:
        paths = a * b
    return paths.max(axis=1)


def transitive_closure_matrix(mat, code, max_iter):
    """Iterate q <- q | (q o q) to the least fixpoint.

    Returns (closure, converged). Fixpoint detection is exact entry equality;
    when max_iter steps pass without a fixpoint the current iterate is
    returned with converged=False.
    """
    q = np.array(mat, dtype=np.float64)
    for _ in range(int(max_iter)):
        step = np.maximum(q, sup_compose(q, code))
        if np.array_equal(step, q):
            return q, True
        q = step
    return q, False


def is_transitive_matrix(mat, code, eps):
    """True iff mat[i, j] * mat[j, k] <= mat[i, k] + eps for all triples."""
    mat = np.asarray(mat, dtype=np.float64)
    return bool(np.all(sup_compose(mat, code) <= mat + eps))


def path_consistency_violation(mat, code, eps, max_len):
    """Search for a pair (x, y) whose consistency constraint is violated by
    some path: value(y -> t1 -> ... -> tk -> x) > residuum(mat[x,y], mat[y,x]) + eps
    for some 1 <= k <= max_len.

    Scans pairs row-major and enumerates intermediate sequences by DFS, pruning
    prefixes whose value is already within the bound (appending factors cannot
    increase a *-product). Returns the first violated (x, y) index pair, or
    None when the constraint holds everywhere.
    """
    m = np.asarray(mat, dtype=np.float64)
    n = m.shape[0]
    conj = _conj_fn(code)
    rows = m.tolist()
    for x in range(n):
        row_x = rows[x]
        for y in range(n):
            a, b = row_x[y], rows[y][x]
            if a <= b:
                bound = 1.0
            elif code == LUKASIEWICZ:
                bound = 1.0 - a + b
            elif code == GODEL:
                bound = b
            else:
                bound = b / a
            bound += eps
            if bound >= 1.0:
                continue
            row_y = rows[y]
            stack = [(t, row_y[t], 1) for t in range(n) if row_y[t] > bound]
            while stack:
                t, val, length = stack.pop()
                if conj(val, rows[t][x]) > bound:
                    return (x, y)
                if length < max_len:
                    row_t = rows[t]
                    for u in range(n):
                        nv = conj(val, row_t[u])
                        if nv > bound:
                            stack.append((u, nv, length + 1))
    return None
