"""Backend selection for the numeric kernels.

The compiled extension (``fuzzrel._ckernels``) is preferred when it built;
otherwise the numpy implementations in ``fuzzrel._kernels_py`` are used.
Setting the environment variable ``FUZZREL_PURE=1`` forces the pure backend,
which is handy for benchmarking and for debugging suspected kernel issues.

Both backends expose the same four functions and agree bit-for-bit on
godel/lukasiewicz inputs (min/max arithmetic) and to float64 rounding on
product.
"""

import os

from .tnorms import TNorm

_FORCE_PURE = os.environ.get("FUZZREL_PURE", "").strip() not in ("", "0")

if not _FORCE_PURE:
    try:
        from . import _ckernels as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "pure"
else:
    from . import _kernels_py as _impl

    BACKEND = "pure"

_TNORM_CODE = {
    TNorm.GODEL: _impl.GODEL,
    TNorm.LUKASIEWICZ: _impl.LUKASIEWICZ,
    TNorm.PRODUCT: _impl.PRODUCT,
}


def tnorm_code(tnorm):
    """Integer code the kernels use for a :class:`~fuzzrel.tnorms.TNorm`."""
    return _TNORM_CODE[TNorm.coerce(tnorm)]


def sup_compose(mat, code):
    return _impl.sup_compose(mat, code)


def transitive_closure_matrix(mat, code, max_iter):
    return _impl.transitive_closure_matrix(mat, code, max_iter)


def is_transitive_matrix(mat, code, eps):
    return _impl.is_transitive_matrix(mat, code, eps)


def path_consistency_violation(mat, code, eps, max_len):
    return _impl.path_consistency_violation(mat, code, eps, max_len)
