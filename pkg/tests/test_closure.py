import itertools

import numpy as np
import pytest

from fuzzrel import (
    ClosureVariant,
    FuzzyRelation,
    TNorm,
    consistent_closure,
    from_crisp,
    is_star_consistent,
    transitive_closure,
    transitive_closure_info,
)
from fuzzrel.tnorms import conjoin

from helpers import random_relation

TRIAD = [[1.0, 1 / 3, 1.0], [0.25, 1.0, 0.5], [0.5, 1.0, 1.0]]
TRIAD_CLOSED = [[1.0, 1.0, 1.0], [0.5, 1.0, 0.5], [0.5, 1.0, 1.0]]
TRIAD_CONSISTENT = [[1.0, 1 / 3, 1.0], [1 / 3, 1.0, 0.5], [0.5, 1.0, 1.0]]
PROD2 = [[1.0, 1 / 3], [0.5, 1.0]]

ALL = list(TNorm)


class TestGoldens:
    def test_triad_closure_exact(self):
        r = FuzzyRelation(["x", "y", "z"], TRIAD)
        closed = transitive_closure(r, TNorm.GODEL)
        assert np.array_equal(closed.matrix, np.array(TRIAD_CLOSED))

    def test_triad_star_closure_exact(self):
        r = FuzzyRelation(["x", "y", "z"], TRIAD)
        star = consistent_closure(r, TNorm.GODEL, ClosureVariant.GODEL_STAR)
        assert np.array_equal(star.matrix, np.array(TRIAD_CONSISTENT))

    def test_product_variants_golden(self):
        r = FuzzyRelation(["x", "y"], PROD2)
        delta = consistent_closure(r, TNorm.PRODUCT, "delta")
        nabla = consistent_closure(r, TNorm.PRODUCT, "nabla")
        assert np.allclose(delta.matrix, [[1.0, 1 / 3], [0.5, 1.0]], atol=1e-12)
        assert np.allclose(nabla.matrix, [[1.0, 1 / 6], [0.25, 1.0]], atol=1e-12)
        # the nabla closure need not even contain R outside godel
        assert not r.issubset(nabla)

    def test_crisp_chain(self):
        chain = from_crisp(["a", "b", "c"], [("a", "b"), ("b", "c")])
        for t in ALL:
            closed = transitive_closure(chain, t)
            assert closed.degree("a", "c") == 1.0
            assert closed == from_crisp(
                ["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]
            )

    def test_transitive_input_is_fixed(self):
        r = FuzzyRelation(["x", "y"], PROD2)
        assert transitive_closure(r, TNorm.PRODUCT) == r

    def test_crisp_total_transitive_fixed_for_all_variants(self):
        r = from_crisp(["a", "b"], [("a", "a"), ("a", "b"), ("b", "b")])
        for variant in ("delta", "nabla"):
            for t in ALL:
                assert consistent_closure(r, t, variant) == r
        assert consistent_closure(r, TNorm.GODEL, "star") == r


class TestVariantValidation:
    def test_star_requires_godel(self):
        r = FuzzyRelation(["x", "y"], PROD2)
        for t in (TNorm.LUKASIEWICZ, TNorm.PRODUCT):
            with pytest.raises(ValueError, match="star"):
                consistent_closure(r, t, ClosureVariant.GODEL_STAR)

    def test_variant_coercion(self):
        assert ClosureVariant.coerce("delta") is ClosureVariant.DELTA
        assert ClosureVariant.coerce(ClosureVariant.NABLA) is ClosureVariant.NABLA
        with pytest.raises(ValueError, match="variant"):
            ClosureVariant.coerce("sigma")


@pytest.mark.parametrize("t", ALL)
class TestClosureProperties:
    def test_output_transitive_and_contains_input(self, t):
        rng = np.random.default_rng(11)
        for _ in range(120):
            r = random_relation(rng, int(rng.integers(1, 6)))
            closed, converged = transitive_closure_info(r, t)
            assert converged
            assert r.issubset(closed)
            assert closed.is_transitive(t)

    def test_idempotent(self, t):
        rng = np.random.default_rng(13)
        for _ in range(80):
            r = random_relation(rng, int(rng.integers(1, 6)))
            closed = transitive_closure(r, t)
            assert transitive_closure(closed, t) == closed

    def test_monotone(self, t):
        rng = np.random.default_rng(17)
        for _ in range(80):
            n = int(rng.integers(1, 6))
            r = random_relation(rng, n)
            bigger = r.union(random_relation(rng, n, density=0.3))
            assert transitive_closure(r, t).issubset(transitive_closure(bigger, t))

    def test_minimal_among_transitive_supersets(self, t):
        rng = np.random.default_rng(19)
        for _ in range(120):
            n = int(rng.integers(1, 6))
            r = random_relation(rng, n)
            q = transitive_closure(r.union(random_relation(rng, n, 0.3)), t)
            assert transitive_closure(r, t).issubset(q)

    def test_path_supremum_formula(self, t):
        # the fixpoint equals the explicit sup over paths with < n intermediates
        rng = np.random.default_rng(23)
        for _ in range(40):
            n = int(rng.integers(2, 5))
            r = random_relation(rng, n, density=0.7)
            closed = transitive_closure(r, t)
            m = r.matrix
            for x in range(n):
                for y in range(n):
                    best = m[x, y]
                    for length in range(1, n):
                        for mids in itertools.product(range(n), repeat=length):
                            seq = (x, *mids, y)
                            value = m[seq[0], seq[1]]
                            for a, b in zip(seq[1:], seq[2:]):
                                value = conjoin(t, value, m[a, b])
                            best = max(best, value)
                    assert closed.matrix[x, y] == pytest.approx(best, abs=1e-12)


class TestConsistentClosureLaws:
    @pytest.mark.parametrize("t", ALL)
    def test_nabla_below_delta(self, t):
        rng = np.random.default_rng(29)
        for _ in range(150):
            r = random_relation(rng, int(rng.integers(1, 6)))
            nabla = consistent_closure(r, t, "nabla")
            delta = consistent_closure(r, t, "delta")
            assert nabla.issubset(delta)

    def test_godel_variants_collapse(self):
        rng = np.random.default_rng(31)
        for _ in range(150):
            r = random_relation(rng, int(rng.integers(1, 6)))
            nabla = consistent_closure(r, TNorm.GODEL, "nabla")
            delta = consistent_closure(r, TNorm.GODEL, "delta")
            star = consistent_closure(r, TNorm.GODEL, "star")
            assert nabla == delta == star

    @pytest.mark.parametrize("t", ALL)
    def test_delta_below_closure(self, t):
        rng = np.random.default_rng(37)
        for _ in range(150):
            r = random_relation(rng, int(rng.integers(1, 6)))
            delta = consistent_closure(r, t, "delta")
            assert delta.issubset(transitive_closure(r, t))

    @pytest.mark.parametrize("t", ALL)
    def test_nabla_consistent(self, t):
        rng = np.random.default_rng(41)
        for _ in range(150):
            r = random_relation(rng, int(rng.integers(1, 6)))
            nabla = consistent_closure(r, t, "nabla")
            assert is_star_consistent(nabla, t)

    @pytest.mark.parametrize("t", ALL)
    def test_nabla_minimal(self, t):
        # nabla sits below every consistent superset of R
        rng = np.random.default_rng(43)
        found = 0
        for _ in range(400):
            n = int(rng.integers(1, 5))
            r = random_relation(rng, n)
            q = r.union(random_relation(rng, n, density=0.25))
            if not is_star_consistent(q, t):
                q = transitive_closure(q, t)  # transitive, hence consistent
                if not r.issubset(q):
                    continue
            found += 1
            assert consistent_closure(r, t, "nabla").issubset(q)
        assert found >= 300

    def test_godel_star_consistent_and_contains(self):
        rng = np.random.default_rng(47)
        for _ in range(150):
            r = random_relation(rng, int(rng.integers(1, 6)))
            star = consistent_closure(r, TNorm.GODEL, "star")
            assert r.issubset(star)
            assert is_star_consistent(star, TNorm.GODEL)


def test_iteration_cap_is_generous():
    # a single long chain needs the most composition rounds
    n = 8
    arcs = [(chr(97 + i), chr(97 + i + 1)) for i in range(n - 1)]
    chain = from_crisp([chr(97 + i) for i in range(n)], arcs)
    closed, converged = transitive_closure_info(chain, TNorm.GODEL)
    assert converged
    assert closed.degree("a", chr(97 + n - 1)) == 1.0
