"""Fuzzy preference relations: t-norm algebra, closures, and extensions.

The package computes with fuzzy relations over finite labeled universes
under the godel, lukasiewicz, and product t-norms: residuated scalar
operations, transitive and consistent closures, compatible-extension and
consistency predicates, a constructive totalization procedure, and
exhaustive brute-force verification sweeps at tiny scale.
"""

from .closure import (
    ClosureVariant,
    consistent_closure,
    transitive_closure,
    transitive_closure_info,
)
from .extension import (
    ExtensionReport,
    RelationClass,
    is_class_member,
    is_compatible_extension_asym,
    is_consistent_path_condition,
    is_extension,
    is_star_compatible_extension,
    is_star_consistent,
    star_compatibility_violations,
    totalize,
)
from .kernels import BACKEND
from .oracle import (
    GridSpec,
    SweepReport,
    enumerate_relations,
    verify_adjunction_grid,
    verify_consistency_equivalence,
    verify_crisp_duggan_intersection,
    verify_least_consistent_closure,
)
from .relation import (
    FuzzyRelation,
    Universe,
    from_crisp,
    from_csv_text,
    from_json_dict,
    make_relation,
)
from .tnorms import EPS, TNorm, conjoin, negation, residuum

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "EPS",
    "ClosureVariant",
    "ExtensionReport",
    "FuzzyRelation",
    "GridSpec",
    "RelationClass",
    "SweepReport",
    "TNorm",
    "Universe",
    "conjoin",
    "consistent_closure",
    "enumerate_relations",
    "from_crisp",
    "from_csv_text",
    "from_json_dict",
    "is_class_member",
    "is_compatible_extension_asym",
    "is_consistent_path_condition",
    "is_extension",
    "is_star_compatible_extension",
    "is_star_consistent",
    "make_relation",
    "negation",
    "residuum",
    "star_compatibility_violations",
    "totalize",
    "transitive_closure",
    "transitive_closure_info",
    "verify_adjunction_grid",
    "verify_consistency_equivalence",
    "verify_crisp_duggan_intersection",
    "verify_least_consistent_closure",
    "__version__",
]
