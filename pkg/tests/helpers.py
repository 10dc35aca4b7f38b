"""Shared builders for randomized test instances."""

import numpy as np

from fuzzrel import FuzzyRelation, RelationClass, Universe, transitive_closure
from fuzzrel.tnorms import residuum_arrays

LABELS = "abcdefgh"


def universe(n):
    return Universe(LABELS[:n])


def random_matrix(rng, n, density=0.5):
    """Sparse-ish random degree matrix: most entries zero at low density."""
    values = rng.random((n, n))
    mask = rng.random((n, n)) < density
    return np.where(mask, values, 0.0)


def random_relation(rng, n, density=0.5):
    return FuzzyRelation(universe(n), random_matrix(rng, n, density))


def random_transitive(rng, n, tnorm, density=0.5):
    return transitive_closure(random_relation(rng, n, density), tnorm)


def random_class_member(rng, n, tnorm, relation_class):
    """A random member of r1/r2/r3 (or an arbitrary relation for any)."""
    c = RelationClass.coerce(relation_class)
    if c is RelationClass.UNRESTRICTED:
        return random_relation(rng, n)
    mat = random_matrix(rng, n, density=0.5)
    if c is RelationClass.STRICT_PARTIAL_ORDER:
        # acyclic support: strictly upper triangular under a random relabeling,
        # so the closure cannot create a path back to the diagonal
        mat = np.triu(mat, k=1)
        perm = rng.permutation(n)
        mat = mat[np.ix_(perm, perm)]
    elif c is RelationClass.PREORDER:
        np.fill_diagonal(mat, 1.0)
    else:
        np.fill_diagonal(mat, 0.0)
    return transitive_closure(FuzzyRelation(universe(n), mat), tnorm)


def random_star_compatible_extension(rng, rel, tnorm):
    """Sample Q with rel <= Q <= the residuum bounds, entry by entry.

    Every such Q is a *-compatible extension of rel; the bounds are never
    below rel itself (b <= a -> b), so the interval is well formed.
    """
    bounds = residuum_arrays(tnorm, rel.matrix.T, rel.matrix)
    lo = rel.matrix
    q = lo + rng.random(lo.shape) * (bounds - lo)
    return FuzzyRelation(rel.universe, np.minimum(q, bounds))
