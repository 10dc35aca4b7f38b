"""Fuzzy relations over a finite labeled universe.

A :class:`FuzzyRelation` is a square float64 matrix indexed by a fixed,
ordered list of alternative labels; entry ``(i, j)`` holds the degree to
which alternative ``i`` is related to alternative ``j``.  Lattice
operations are pointwise (union = max, intersection = min), inclusion is
pointwise ``<=`` up to the global tolerance, and the converse transposes.

Relations over different universes (different labels or different order)
never compare; every binary operation insists on identical universes.
"""

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .tnorms import EPS, TNorm, conjoin_arrays, negation_arrays

__all__ = [
    "Universe",
    "FuzzyRelation",
    "make_relation",
    "from_crisp",
    "from_json_dict",
    "from_csv_text",
]


@dataclass(frozen=True)
class Universe:
    """An ordered, duplicate-free tuple of alternative labels."""

    labels: tuple

    def __init__(self, labels):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise ValueError("universe needs at least one alternative")
        if len(set(labels)) != len(labels):
            seen = set()
            dup = next(x for x in labels if x in seen or seen.add(x))
            raise ValueError(f"duplicate label {dup!r} in universe")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {x: i for i, x in enumerate(labels)})

    @property
    def size(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"label {label!r} not in universe {list(self.labels)}") from None

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __contains__(self, label):
        return label in self._index

    def __eq__(self, other):
        if not isinstance(other, Universe):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)


def _as_universe(u):
    return u if isinstance(u, Universe) else Universe(u)


def _validated_matrix(universe, entries):
    mat = np.array(entries, dtype=np.float64, order="C")
    n = universe.size
    if mat.shape != (n, n):
        raise ValueError(
            f"matrix shape {mat.shape} does not match universe size {n}"
        )
    bad = ~((mat >= 0.0) & (mat <= 1.0))  # catches NaN too
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise ValueError(
            f"entry ({universe.labels[i]!r}, {universe.labels[j]!r}) = {mat[i, j]!r}"
            " is not a degree in [0, 1]"
        )
    mat.flags.writeable = False
    return mat


@dataclass(frozen=True, eq=False)
class FuzzyRelation:
    """A fuzzy relation R: X x X -> [0, 1] with dense matrix storage."""

    universe: Universe
    matrix: np.ndarray = field(repr=False)

    def __init__(self, universe, matrix):
        universe = _as_universe(universe)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "matrix", _validated_matrix(universe, matrix))

    # -- basics ---------------------------------------------------------

    @property
    def n(self):
        return self.universe.size

    def degree(self, x, y):
        """R(x, y) as a plain float."""
        return float(self.matrix[self.universe.index(x), self.universe.index(y)])

    def _same_universe(self, other):
        if self.universe != other.universe:
            raise ValueError(
                f"universe mismatch: {list(self.universe.labels)} vs"
                f" {list(other.universe.labels)}"
            )

    def __eq__(self, other):
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(
            self.matrix, other.matrix
        )

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(repr(float(v)) for v in row) + "]" for row in self.matrix
        )
        return f"FuzzyRelation({list(self.universe.labels)!r}, [{rows}])"

    # -- lattice operations ----------------------------------------------

    def union(self, other):
        self._same_universe(other)
        return FuzzyRelation(self.universe, np.maximum(self.matrix, other.matrix))

    def intersection(self, other):
        self._same_universe(other)
        return FuzzyRelation(self.universe, np.minimum(self.matrix, other.matrix))

    def issubset(self, other, eps=EPS):
        """R <= Q pointwise, up to eps."""
        self._same_universe(other)
        return bool(np.all(self.matrix <= other.matrix + eps))

    def converse(self):
        return FuzzyRelation(self.universe, self.matrix.T.copy())

    def asymmetric_part(self, tnorm):
        """P_R(x, y) = R(x, y) * neg(R(y, x)) under the given t-norm."""
        t = TNorm.coerce(tnorm)
        return FuzzyRelation(
            self.universe,
            conjoin_arrays(t, self.matrix, negation_arrays(t, self.matrix.T)),
        )

    def insert_arc(self, x, y):
        """Copy of R with R(x, y) raised to 1."""
        i = self.universe.index(x)
        j = self.universe.index(y)
        mat = self.matrix.copy()
        mat[i, j] = 1.0
        return FuzzyRelation(self.universe, mat)

    # -- predicates -------------------------------------------------------

    def is_reflexive(self, eps=EPS):
        return bool(np.all(np.abs(np.diagonal(self.matrix) - 1.0) <= eps))

    def is_irreflexive(self, eps=EPS):
        return bool(np.all(np.diagonal(self.matrix) <= eps))

    def is_transitive(self, tnorm, eps=EPS):
        """R(x, y) * R(y, z) <= R(x, z) + eps for all x, y, z."""
        code = kernels.tnorm_code(tnorm)
        return bool(kernels.is_transitive_matrix(self.matrix, code, eps))

    def is_total(self, eps=EPS):
        """R(x, y) > 0 or R(y, x) > 0 for every pair of distinct x, y."""
        positive = (self.matrix > eps) | (self.matrix.T > eps)
        np.fill_diagonal(positive, True)
        return bool(positive.all())

    def is_strongly_total(self, eps=EPS):
        """R(x, y) = 1 or R(y, x) = 1 for every pair of distinct x, y."""
        hits = (self.matrix >= 1.0 - eps) | (self.matrix.T >= 1.0 - eps)
        np.fill_diagonal(hits, True)
        return bool(hits.all())

    def is_crisp(self, eps=EPS):
        near0 = self.matrix <= eps
        near1 = self.matrix >= 1.0 - eps
        return bool((near0 | near1).all())

    # -- serialization ----------------------------------------------------

    def to_json_dict(self, tnorm=None):
        doc = {"universe": list(self.universe.labels)}
        if tnorm is not None:
            doc["tnorm"] = str(TNorm.coerce(tnorm))
        doc["matrix"] = [[float(v) for v in row] for row in self.matrix]
        return doc

    def to_csv_text(self):
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(self.universe.labels)
        for row in self.matrix:
            writer.writerow([repr(float(v)) for v in row])
        return buf.getvalue()


def make_relation(universe, entries):
    """Build a relation, validating shape and degree range."""
    return FuzzyRelation(universe, entries)


def from_crisp(universe, pairs):
    """The {0,1}-valued relation holding exactly the given (x, y) arcs."""
    u = _as_universe(universe)
    mat = np.zeros((u.size, u.size), dtype=np.float64)
    for x, y in pairs:
        mat[u.index(x), u.index(y)] = 1.0
    return FuzzyRelation(u, mat)


def from_json_dict(doc):
    """Parse ``{"universe": [...], "tnorm": ..., "matrix": [[...]]}``.

    Returns (relation, tnorm) where tnorm is None when the document does
    not carry one.
    """
    if not isinstance(doc, dict):
        raise ValueError("relation document must be a JSON object")
    try:
        labels = doc["universe"]
        matrix = doc["matrix"]
    except KeyError as exc:
        raise ValueError(f"relation document missing key {exc}") from None
    tnorm = doc.get("tnorm")
    if tnorm is not None:
        tnorm = TNorm.coerce(tnorm)
    return FuzzyRelation(labels, matrix), tnorm


def from_csv_text(text):
    """Parse the CSV layout: a label row, then one matrix row per label."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise ValueError("empty CSV document")
    labels = [cell.strip() for cell in rows[0]]
    body = rows[1:]
    if len(body) != len(labels):
        raise ValueError(
            f"expected {len(labels)} matrix rows after the label row, got {len(body)}"
        )
    matrix = []
    for row in body:
        try:
            matrix.append([float(cell) for cell in row])
        except ValueError:
            raise ValueError(f"non-numeric matrix cell in row {row!r}") from None
    return FuzzyRelation(labels, matrix)
