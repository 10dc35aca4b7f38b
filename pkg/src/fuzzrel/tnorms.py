"""Left-continuous t-norms on the unit interval, with residua and negations.

Three algebras are built in, each a triple (conjunction ``*``, residuum
``->``, negation ``not``) satisfying the adjunction law

    a * c <= b   iff   c <= a -> b

which is what every closure/consistency computation in this package leans on:

============  ==================  ============================  ==================
name          a * b               a -> b                        not a
============  ==================  ============================  ==================
godel         min(a, b)           1 if a <= b else b            1 if a == 0 else 0
lukasiewicz   max(0, a + b - 1)   min(1, 1 - a + b)             1 - a
product       a * b               1 if a <= b else b / a        1 if a == 0 else 0
============  ==================  ============================  ==================

The residuum is the adjoint sup{c | a * c <= b}; the closed forms above are
used directly, no suprema are ever computed. Negation is ``a -> 0``.

Other left-continuous t-norms can be used anywhere a :class:`TNorm` is
accepted by extending the enum-to-operation tables at the bottom of this
module; the adjunction property test in the test-suite is the contract a new
triple must pass.
"""

from __future__ import annotations

import enum
import math
from typing import Union

import numpy as np

#: Absolute tolerance for degree comparisons (<=, ==) and derived predicates.
#: The Godel operations are exact on any inputs; Lukasiewicz arithmetic and the
#: product residuum b/a introduce rounding on the order of an ulp.
EPS = 1e-9


class TNorm(enum.Enum):
    """Selector for one conjunction/residuum/negation triple."""

    GODEL = "godel"
    LUKASIEWICZ = "lukasiewicz"
    PRODUCT = "product"

    @classmethod
    def coerce(cls, value: Union["TNorm", str]) -> "TNorm":
        """Accept a TNorm or its serialized lowercase name."""
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            names = ", ".join(t.value for t in cls)
            raise ValueError(f"unknown t-norm {value!r}; expected one of: {names}") from None

    def __str__(self) -> str:
        return self.value


def check_degree(value: float, what: str = "degree") -> float:
    """Validate a truth degree: a finite real in [0, 1]. NaN is rejected."""
    v = float(value)
    if math.isnan(v) or not (0.0 <= v <= 1.0):
        raise ValueError(f"{what} must lie in [0, 1], got {value!r}")
    return v


def deg_le(a: float, b: float) -> bool:
    """a <= b up to the global tolerance."""
    return a <= b + EPS


def deg_eq(a: float, b: float) -> bool:
    """a == b up to the global tolerance."""
    return abs(a - b) <= EPS


# -- scalar operations -------------------------------------------------------

def conjoin(t: Union[TNorm, str], a: float, b: float) -> float:
    """The t-norm a * b. Commutative, associative, monotone, unit 1."""
    t = TNorm.coerce(t)
    if t is TNorm.GODEL:
        return a if a < b else b
    if t is TNorm.LUKASIEWICZ:
        # exact unit: a + 1.0 - 1.0 can drop or gain an ulp
        if a == 1.0:
            return b
        if b == 1.0:
            return a
        s = a + b - 1.0
        return s if s > 0.0 else 0.0
    return a * b


def residuum(t: Union[TNorm, str], a: float, b: float) -> float:
    """The residuum a -> b, adjoint to the t-norm.

    For the product case a > b implies a > 0, so b/a is always well defined;
    a == 0 falls into the a <= b branch.
    """
    t = TNorm.coerce(t)
    if a <= b:
        return 1.0
    if t is TNorm.LUKASIEWICZ:
        return 1.0 - a + b
    if t is TNorm.GODEL:
        return b
    return b / a


def negation(t: Union[TNorm, str], a: float) -> float:
    """The negation (a -> 0): drastic 0/1 for godel and product, 1 - a for lukasiewicz."""
    return residuum(t, a, 0.0)


# -- elementwise array operations --------------------------------------------

def conjoin_arrays(t: Union[TNorm, str], a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise t-norm of two degree arrays."""
    t = TNorm.coerce(t)
    if t is TNorm.GODEL:
        return np.minimum(a, b)
    if t is TNorm.LUKASIEWICZ:
        out = np.maximum(a + b - 1.0, 0.0)
        out = np.where(np.equal(a, 1.0), b, out)
        return np.where(np.equal(b, 1.0), a, out)
    return a * b


def residuum_arrays(t: Union[TNorm, str], a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise residuum of two degree arrays."""
    t = TNorm.coerce(t)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if t is TNorm.LUKASIEWICZ:
        return np.where(a <= b, 1.0, np.minimum(1.0 - a + b, 1.0))
    if t is TNorm.GODEL:
        return np.where(a <= b, 1.0, b)
    out = np.ones(np.broadcast_shapes(a.shape, b.shape))
    mask = a > b
    np.divide(np.broadcast_to(b, out.shape), np.broadcast_to(a, out.shape), out=out, where=mask)
    return out


def negation_arrays(t: Union[TNorm, str], a: np.ndarray) -> np.ndarray:
    """Elementwise negation of a degree array."""
    return residuum_arrays(t, a, np.zeros_like(np.asarray(a, dtype=np.float64)))
