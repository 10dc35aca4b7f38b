"""Transitive and consistent closures of fuzzy relations.

``transitive_closure`` iterates Q <- Q | (Q o Q), where o is the sup-*
composition, until the matrix stops changing.  Because the supremum over
all paths is attained on simple paths (dropping a cycle drops *-factors,
each <= 1, so the path value cannot decrease), repeated squaring reaches
the fixpoint within ceil(log2 n) + 1 steps; a cap of ceil(log2 n) + 2
guards against floating-point pathologies, with a convergence flag.

The consistent closures:

    delta:  R(x, y) | [T(R)(x, y) * R(y, x)]
    nabla:  T(R)(x, y) * [R(x, y) | R(y, x)]
    star:   T(R) /\\ (R \\/ R^-1)          (godel only)

Under godel all three coincide; under lukasiewicz/product they may differ,
and nabla need not even contain R.
"""

import enum
import math

import numpy as np

from . import kernels
from .relation import FuzzyRelation
from .tnorms import TNorm, conjoin_arrays

__all__ = [
    "ClosureVariant",
    "transitive_closure",
    "transitive_closure_info",
    "consistent_closure",
]


class ClosureVariant(enum.Enum):
    DELTA = "delta"
    NABLA = "nabla"
    GODEL_STAR = "star"

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            options = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown closure variant {value!r} (expected {options})") from None

    def __str__(self):
        return self.value


def _closure_iteration_cap(n):
    return (math.ceil(math.log2(n)) if n > 1 else 0) + 2


def transitive_closure_info(rel, tnorm):
    """(closure, converged); converged is False only if the iteration cap hit."""
    code = kernels.tnorm_code(tnorm)
    mat, converged = kernels.transitive_closure_matrix(
        rel.matrix, code, _closure_iteration_cap(rel.n)
    )
    return FuzzyRelation(rel.universe, mat), bool(converged)


def transitive_closure(rel, tnorm):
    """The least *-transitive relation containing rel."""
    closed, _ = transitive_closure_info(rel, tnorm)
    return closed


def consistent_closure(rel, tnorm, variant):
    """The delta, nabla, or (godel-only) star consistent closure."""
    t = TNorm.coerce(tnorm)
    v = ClosureVariant.coerce(variant)
    if v is ClosureVariant.GODEL_STAR and t is not TNorm.GODEL:
        raise ValueError("the star variant is defined for the godel t-norm only")
    closed = transitive_closure(rel, t).matrix
    r = rel.matrix
    if v is ClosureVariant.DELTA:
        out = np.maximum(r, conjoin_arrays(t, closed, r.T))
    elif v is ClosureVariant.NABLA:
        out = conjoin_arrays(t, closed, np.maximum(r, r.T))
    else:
        out = np.minimum(closed, np.maximum(r, r.T))
    return FuzzyRelation(rel.universe, out)
