"""Brute-force ground truth on tiny universes.

Everything here re-derives its verdicts from first principles: exhaustive
enumeration over a degree grid, independent boolean machinery for the
crisp sweep, and direct path enumeration for consistency.  The sweeps
never appeal to the property of the module they are checking (minimality
is established by comparing against every enumerated superset, not by
trusting the closure's own minimality claim).

Grids default to {0, 1/2, 1}: godel arithmetic on these values is exact
in doubles, so a reported counterexample is a real one, not rounding.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .closure import ClosureVariant, consistent_closure, transitive_closure
from .extension import (
    RelationClass,
    is_class_member,
    is_consistent_path_condition,
    is_star_consistent,
)
from .relation import FuzzyRelation, Universe
from .tnorms import EPS, TNorm, conjoin, negation, residuum

__all__ = [
    "GridSpec",
    "SweepReport",
    "enumerate_relations",
    "verify_least_consistent_closure",
    "verify_crisp_duggan_intersection",
    "verify_consistency_equivalence",
    "verify_adjunction_grid",
]

DEFAULT_GRID_VALUES = (0.0, 0.5, 1.0)
DEFAULT_CANDIDATE_CAP = 1 << 25

_LABELS = ("a", "b", "c")


@dataclass(frozen=True)
class GridSpec:
    """Degree grid for exhaustive sweeps: n in {2, 3}, values ascending."""

    universe_size: int = 2
    values: tuple = DEFAULT_GRID_VALUES
    max_candidates: int = DEFAULT_CANDIDATE_CAP

    def __post_init__(self):
        if self.universe_size not in (2, 3):
            raise ValueError("universe_size must be 2 or 3")
        values = tuple(float(v) for v in self.values)
        if len(values) < 2:
            raise ValueError("grid needs at least two values")
        if list(values) != sorted(set(values)):
            raise ValueError("grid values must be strictly ascending")
        if values[0] < 0.0 or values[-1] > 1.0:
            raise ValueError("grid values must lie in [0, 1]")
        object.__setattr__(self, "values", values)
        if self.count > self.max_candidates:
            raise ValueError(
                f"grid enumerates {self.count} relations,"
                f" above the cap {self.max_candidates}"
            )

    @property
    def count(self):
        return len(self.values) ** (self.universe_size**2)

    @property
    def universe(self):
        return Universe(_LABELS[: self.universe_size])

    def to_json_dict(self):
        return {"universe_size": self.universe_size, "values": list(self.values)}


def enumerate_relations(grid):
    """Every grid-valued relation, odometer order over row-major entries."""
    u = grid.universe
    n = grid.universe_size
    for combo in itertools.product(grid.values, repeat=n * n):
        yield FuzzyRelation(u, np.array(combo, dtype=np.float64).reshape(n, n))


@dataclass
class SweepReport:
    """Outcome of one exhaustive sweep."""

    property: str
    grid: dict
    tnorm: str
    instances_checked: int
    violations: int
    first_counterexample: dict = field(default=None)

    @property
    def passed(self):
        return self.violations == 0

    def to_json_dict(self):
        doc = {
            "property": self.property,
            "grid": self.grid,
            "tnorm": self.tnorm,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
        }
        if self.first_counterexample is not None:
            doc["first_counterexample"] = self.first_counterexample
        return doc


def _path_consistent(rel, tnorm, eps=EPS):
    # independent route: direct path enumeration, no closure involved
    code = kernels.tnorm_code(tnorm)
    return kernels.path_consistency_violation(rel.matrix, code, eps, rel.n) is None


def verify_least_consistent_closure(grid):
    """Minimality sweep for the godel consistent closure.

    For every grid relation R, with C = the star closure of R: asserts
    R <= C, C consistent (by path enumeration), C <= Q for every grid
    relation Q above R that is consistent, and C = R when R is already
    consistent.
    """
    stack = np.stack([r.matrix for r in enumerate_relations(grid)])
    consistent = np.array(
        [
            kernels.path_consistency_violation(
                mat, kernels.tnorm_code(TNorm.GODEL), EPS, grid.universe_size
            )
            is None
            for mat in stack
        ]
    )
    checked = 0
    violations = 0
    first = None

    def witness(rel, reason, extra=None):
        doc = {"relation": rel.to_json_dict(), "reason": reason}
        if extra is not None:
            doc.update(extra)
        return doc

    for idx, rel in enumerate(enumerate_relations(grid)):
        checked += 1
        closed = consistent_closure(rel, TNorm.GODEL, ClosureVariant.GODEL_STAR)
        bad = None
        if not rel.issubset(closed):
            bad = witness(rel, "closure does not contain the relation")
        elif not _path_consistent(closed, TNorm.GODEL):
            bad = witness(rel, "closure is not consistent")
        elif consistent[idx] and not np.array_equal(closed.matrix, rel.matrix):
            bad = witness(rel, "already-consistent relation moved by the closure")
        else:
            above = consistent & (stack + EPS >= rel.matrix).all(axis=(1, 2))
            too_small = (stack[above] + EPS < closed.matrix).any(axis=(1, 2))
            if too_small.any():
                q_idx = int(np.flatnonzero(above)[np.argmax(too_small)])
                bad = witness(
                    rel,
                    "a smaller consistent superset exists",
                    {"smaller": FuzzyRelation(rel.universe, stack[q_idx]).to_json_dict()},
                )
        if bad is not None:
            violations += 1
            if first is None:
                first = bad
    return SweepReport(
        property="least-closure",
        grid=grid.to_json_dict(),
        tnorm=str(TNorm.GODEL),
        instances_checked=checked,
        violations=violations,
        first_counterexample=first,
    )


def _bool_warshall(mat):
    out = mat.copy()
    n = out.shape[0]
    for k in range(n):
        out |= np.outer(out[:, k], out[k, :])
    return out


def verify_crisp_duggan_intersection(relation_class=RelationClass.TRANSITIVE):
    """Crisp intersection theorem on |X| = 3.

    For every consistent crisp R whose transitive closure lands in the
    class: intersect all total, transitive, compatible crisp extensions
    of R inside the class and compare against T(R).  The extension side
    runs on independent boolean operations; only T(R) itself comes from
    the closure under test.
    """
    c = RelationClass.coerce(relation_class)
    grid = GridSpec(universe_size=3, values=(0.0, 1.0))
    u = grid.universe
    rels = list(enumerate_relations(grid))
    qs = np.stack([r.matrix for r in rels]) > 0.5

    comp = (qs[:, :, :, None] & qs[:, None, :, :]).any(axis=2)
    trans_ok = ~(comp & ~qs).any(axis=(1, 2))
    offdiag = ~np.eye(3, dtype=bool)
    total_ok = ((qs | qs.transpose(0, 2, 1)) | ~offdiag).all(axis=(1, 2))
    diag = qs[:, np.arange(3), np.arange(3)]
    if c is RelationClass.STRICT_PARTIAL_ORDER:
        member = trans_ok & ~diag.any(axis=1)
    elif c is RelationClass.PREORDER:
        member = trans_ok & diag.all(axis=1)
    elif c is RelationClass.TRANSITIVE:
        member = trans_ok
    else:
        member = np.ones(len(qs), dtype=bool)
    candidate = member & total_ok & trans_ok

    checked = 0
    violations = 0
    first = None
    for rel, b in zip(rels, qs):
        strict = b & ~b.T
        closure_bool = _bool_warshall(b)
        if (strict & closure_bool.T).any():
            continue  # R not consistent (boolean route)
        closed = transitive_closure(rel, TNorm.GODEL)
        if not is_class_member(closed, c, TNorm.GODEL):
            continue
        checked += 1
        subset_ok = (~b[None] | qs).all(axis=(1, 2))
        compat_ok = subset_ok & ~(strict[None] & qs.transpose(0, 2, 1)).any(axis=(1, 2))
        family = candidate & compat_ok
        bad = None
        if not family.any():
            bad = {"relation": rel.to_json_dict(), "reason": "no total compatible extension"}
        else:
            inter = qs[family].all(axis=0)
            if not np.array_equal(inter, closed.matrix > 0.5):
                bad = {
                    "relation": rel.to_json_dict(),
                    "reason": "intersection differs from the transitive closure",
                    "intersection": inter.astype(float).tolist(),
                    "closure": closed.to_json_dict(),
                }
        if bad is not None:
            violations += 1
            if first is None:
                first = bad
    return SweepReport(
        property="duggan-crisp",
        grid={**grid.to_json_dict(), "relation_class": str(c)},
        tnorm=str(TNorm.GODEL),
        instances_checked=checked,
        violations=violations,
        first_counterexample=first,
    )


def verify_consistency_equivalence(grid, tnorm):
    """Closure-based consistency must match path-based consistency, everywhere."""
    t = TNorm.coerce(tnorm)
    checked = 0
    violations = 0
    first = None
    for rel in enumerate_relations(grid):
        checked += 1
        by_closure = is_star_consistent(rel, t)
        by_paths = is_consistent_path_condition(rel, t)
        if by_closure != by_paths:
            violations += 1
            if first is None:
                first = {
                    "relation": rel.to_json_dict(tnorm=t),
                    "closure_verdict": by_closure,
                    "path_verdict": by_paths,
                }
    return SweepReport(
        property="consistency-equiv",
        grid=grid.to_json_dict(),
        tnorm=str(t),
        instances_checked=checked,
        violations=violations,
        first_counterexample=first,
    )


def verify_adjunction_grid(tnorm, step=0.25):
    """Residuated-lattice laws over the grid {0, step, 2 step, ..., 1}.

    Covers the adjunction, the order/unit laws, sup-distributivity of *
    and -> in finite form, and the negation laws, at every grid triple.
    """
    t = TNorm.coerce(tnorm)
    k = round(1.0 / step)
    if abs(k * step - 1.0) > 1e-12 or k < 1:
        raise ValueError(f"step {step!r} does not divide 1")
    values = [i * step for i in range(k + 1)]

    def laws(a, b, c):
        conj = conjoin(t, a, b)
        resid_bc = residuum(t, b, c)
        resid_ab = residuum(t, a, b)
        yield "adjunction", (conj <= c + EPS) == (a <= resid_bc + EPS)
        yield "modus-ponens", conjoin(t, a, resid_ab) <= min(a, b) + EPS
        yield "conjunction-below", conj <= min(a, b) + EPS
        yield "weakening", b <= resid_ab + EPS
        yield "order-vs-one", (a <= b + EPS) == (resid_ab >= 1.0 - EPS)
        yield "unit-left", abs(residuum(t, 1.0, a) - a) <= EPS
        yield "identity", abs(residuum(t, a, a) - 1.0) <= EPS
        join = max(a, b)
        yield "sup-distributes-conj", abs(
            conjoin(t, join, c) - max(conjoin(t, a, c), conjoin(t, b, c))
        ) <= EPS
        yield "sup-distributes-resid", abs(
            residuum(t, join, c) - min(residuum(t, a, c), residuum(t, b, c))
        ) <= EPS
        yield "negation-adjoint", (a <= negation(t, b) + EPS) == (conj <= EPS)
        yield "non-contradiction", conjoin(t, a, negation(t, a)) <= EPS

    checked = 0
    violations = 0
    first = None
    for a, b, c in itertools.product(values, repeat=3):
        checked += 1
        failed = [name for name, ok in laws(a, b, c) if not ok]
        if failed:
            violations += 1
            if first is None:
                first = {"a": a, "b": b, "c": c, "laws": failed}
    return SweepReport(
        property="adjunction",
        grid={"step": step, "values": values},
        tnorm=str(t),
        instances_checked=checked,
        violations=violations,
        first_counterexample=first,
    )
