"""Compatible extensions, consistency tests, and constructive totalization.

Two notions of "Q extends R compatibly" live here.  The residuum form
asks Q(y, x) <= R(x, y) -> R(y, x) at every ordered pair; the older
asymmetric-part form asks R <= Q and P_R <= P_Q.  Under godel the first
implies the second, and the 2x2 relation pair R = [[1, 1/2], [1/3, 1]],
Q = [[1, 2/3], [2/3, 1]] separates them.

``totalize`` realizes the extension theorems constructively: insert an
arc at a doubly-zero pair, re-close, repeat until total.  The loop is
monotone (an inserted arc stays at 1), so it ends within n^2 rounds.
All guarantees are re-verified on the output and reported as flags
rather than assumed.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import kernels
from .closure import transitive_closure, transitive_closure_info
from .relation import FuzzyRelation
from .tnorms import EPS, TNorm, residuum_arrays

__all__ = [
    "RelationClass",
    "ExtensionReport",
    "is_extension",
    "is_star_compatible_extension",
    "star_compatibility_violations",
    "is_compatible_extension_asym",
    "is_star_consistent",
    "is_consistent_path_condition",
    "is_class_member",
    "totalize",
]

PATH_CHECK_DEFAULT_CAP = 6


class RelationClass(enum.Enum):
    """Classes of fuzzy relations the extension theorems quantify over."""

    STRICT_PARTIAL_ORDER = "r1"
    PREORDER = "r2"
    TRANSITIVE = "r3"
    UNRESTRICTED = "any"

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            options = ", ".join(v.value for v in cls)
            raise ValueError(f"unknown relation class {value!r} (expected {options})") from None

    def __str__(self):
        return self.value


def is_extension(rel, ext, eps=EPS):
    """True iff rel is pointwise below ext (same universe required)."""
    return rel.issubset(ext, eps=eps)


def _residuum_bounds(rel, tnorm):
    # bounds[a, b] = residuum(R(b, a), R(a, b)); the compatibility condition
    # Q(y, x) <= R(x, y) -> R(y, x) reads Q <= bounds entrywise.
    return residuum_arrays(tnorm, rel.matrix.T, rel.matrix)


def star_compatibility_violations(rel, ext, tnorm, eps=EPS):
    """Ordered pairs where ext breaks the residuum bound over rel.

    Each violation is (y, x, value, bound): ext(y, x) = value exceeds
    residuum(rel(x, y), rel(y, x)) = bound by more than eps.
    """
    rel._same_universe(ext)
    t = TNorm.coerce(tnorm)
    bounds = _residuum_bounds(rel, t)
    labels = rel.universe.labels
    out = []
    for i, j in np.argwhere(ext.matrix > bounds + eps):
        out.append((labels[i], labels[j], float(ext.matrix[i, j]), float(bounds[i, j])))
    return out


def is_star_compatible_extension(rel, ext, tnorm, eps=EPS):
    """R <= Q and Q(y, x) <= R(x, y) -> R(y, x) everywhere."""
    if not is_extension(rel, ext, eps=eps):
        return False
    t = TNorm.coerce(tnorm)
    return bool(np.all(ext.matrix <= _residuum_bounds(rel, t) + eps))


def is_compatible_extension_asym(rel, ext, tnorm, eps=EPS):
    """R <= Q and P_R <= P_Q (asymmetric parts under the given t-norm)."""
    if not is_extension(rel, ext, eps=eps):
        return False
    t = TNorm.coerce(tnorm)
    return rel.asymmetric_part(t).issubset(ext.asymmetric_part(t), eps=eps)


def is_star_consistent(rel, tnorm, eps=EPS):
    """T(R)(y, x) <= R(x, y) -> R(y, x) for all x, y."""
    t = TNorm.coerce(tnorm)
    closed = transitive_closure(rel, t)
    return bool(np.all(closed.matrix <= _residuum_bounds(rel, t) + eps))


def is_consistent_path_condition(rel, tnorm, max_size=PATH_CHECK_DEFAULT_CAP, eps=EPS):
    """Consistency via direct path enumeration, independent of the closure.

    Checks R(y, t1) * R(t1, t2) * ... * R(tk, x) <= R(x, y) -> R(y, x) over
    all intermediate sequences of length 1..n.  Simple sequences suffice
    (cycle removal only drops factors), so length n is exhaustive.  Refuses
    universes larger than max_size; the search is exponential by design.
    """
    if rel.n > max_size:
        raise ValueError(
            f"universe size {rel.n} exceeds the path-enumeration cap {max_size}"
        )
    code = kernels.tnorm_code(tnorm)
    return kernels.path_consistency_violation(rel.matrix, code, eps, rel.n) is None


def is_class_member(rel, relation_class, tnorm, eps=EPS):
    c = RelationClass.coerce(relation_class)
    if c is RelationClass.UNRESTRICTED:
        return True
    if not rel.is_transitive(tnorm, eps=eps):
        return False
    if c is RelationClass.STRICT_PARTIAL_ORDER:
        return rel.is_irreflexive(eps=eps)
    if c is RelationClass.PREORDER:
        return rel.is_reflexive(eps=eps)
    return True


@dataclass(frozen=True)
class ExtensionReport:
    """Outcome of totalize, with every claimed property re-checked."""

    result: FuzzyRelation
    inserted_arcs: tuple
    iterations: int
    verified_total: bool
    verified_transitive: bool
    verified_star_compatible: bool
    verified_class_member: bool
    converged: bool

    @property
    def all_verified(self):
        return (
            self.verified_total
            and self.verified_transitive
            and self.verified_star_compatible
            and self.verified_class_member
            and self.converged
        )

    def to_json_dict(self, tnorm=None):
        return {
            "result": self.result.to_json_dict(tnorm=tnorm),
            "inserted_arcs": [[x, y] for x, y in self.inserted_arcs],
            "iterations": self.iterations,
            "verified_total": self.verified_total,
            "verified_transitive": self.verified_transitive,
            "verified_star_compatible": self.verified_star_compatible,
            "verified_class_member": self.verified_class_member,
            "converged": self.converged,
        }


def _insertable_pairs(mat, eps):
    both_zero = (mat <= eps) & (mat.T <= eps)
    np.fill_diagonal(both_zero, False)
    return np.argwhere(both_zero)


def totalize(rel, tnorm, relation_class, rng=None, eps=EPS):
    """Extend a transitive class member to a total one, arc by arc.

    Repeatedly picks a pair (x, y) with Q(x, y) and Q(y, x) both zero,
    raises Q(x, y) to 1, and re-closes.  The pair is the row-major least
    by default; pass an object with ``randrange`` (e.g. random.Random)
    as rng to randomize the pick order instead.

    The input must already be *-transitive and a member of the requested
    class; both are checked up front.
    """
    t = TNorm.coerce(tnorm)
    c = RelationClass.coerce(relation_class)
    if not rel.is_transitive(t, eps=eps):
        raise ValueError("totalize requires a *-transitive input relation")
    if not is_class_member(rel, c, t, eps=eps):
        raise ValueError(f"input relation is not a member of class {c}")

    labels = rel.universe.labels
    current = rel
    arcs = []
    converged = True
    cap = rel.n * rel.n
    for _ in range(cap):
        candidates = _insertable_pairs(current.matrix, eps)
        if len(candidates) == 0:
            break
        pick = 0 if rng is None else rng.randrange(len(candidates))
        i, j = map(int, candidates[pick])
        current, step_ok = transitive_closure_info(
            current.insert_arc(labels[i], labels[j]), t
        )
        converged = converged and step_ok
        arcs.append((labels[i], labels[j]))

    return ExtensionReport(
        result=current,
        inserted_arcs=tuple(arcs),
        iterations=len(arcs),
        verified_total=current.is_total(eps=eps),
        verified_transitive=current.is_transitive(t, eps=eps),
        verified_star_compatible=is_star_compatible_extension(rel, current, t, eps=eps),
        verified_class_member=is_class_member(current, c, t, eps=eps),
        converged=converged,
    )
