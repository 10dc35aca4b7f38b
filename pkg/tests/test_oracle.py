import numpy as np
import pytest

from fuzzrel import (
    GridSpec,
    SweepReport,
    TNorm,
    enumerate_relations,
    verify_adjunction_grid,
    verify_consistency_equivalence,
    verify_crisp_duggan_intersection,
    verify_least_consistent_closure,
)

ALL = list(TNorm)

CRISP2 = GridSpec(2, (0.0, 1.0))
CRISP3 = GridSpec(3, (0.0, 1.0))
THREE2 = GridSpec(2, (0.0, 0.5, 1.0))


class TestGridSpec:
    def test_counts(self):
        assert CRISP2.count == 16
        assert CRISP3.count == 512
        assert THREE2.count == 81

    def test_universe_labels(self):
        assert CRISP2.universe.labels == ("a", "b")
        assert CRISP3.universe.labels == ("a", "b", "c")

    def test_json(self):
        assert THREE2.to_json_dict() == {
            "universe_size": 2,
            "values": [0.0, 0.5, 1.0],
        }

    def test_rejects_large_universe(self):
        with pytest.raises(ValueError, match="universe_size"):
            GridSpec(4, (0.0, 1.0))

    def test_rejects_descending_values(self):
        with pytest.raises(ValueError, match="ascending"):
            GridSpec(2, (1.0, 0.0))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="ascending"):
            GridSpec(2, (0.0, 0.5, 0.5, 1.0))

    def test_rejects_single_value(self):
        with pytest.raises(ValueError, match="at least two"):
            GridSpec(2, (1.0,))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="lie in"):
            GridSpec(2, (0.0, 1.5))

    def test_rejects_blowup(self):
        with pytest.raises(ValueError, match="cap"):
            GridSpec(2, (0.0, 0.5, 1.0), max_candidates=80)


class TestEnumeration:
    def test_count_matches_spec(self):
        for grid in (CRISP2, THREE2):
            assert sum(1 for _ in enumerate_relations(grid)) == grid.count

    def test_odometer_order_endpoints(self):
        rels = list(enumerate_relations(THREE2))
        assert np.array_equal(rels[0].matrix, np.zeros((2, 2)))
        assert np.array_equal(rels[-1].matrix, np.ones((2, 2)))
        # last entry spins fastest
        assert rels[1].matrix[1, 1] == 0.5
        assert rels[2].matrix[1, 1] == 1.0

    def test_distinct(self):
        seen = {r.matrix.tobytes() for r in enumerate_relations(CRISP3)}
        assert len(seen) == 512


class TestSweepReport:
    def test_passing_json_shape(self):
        report = SweepReport(
            property="demo", grid={}, tnorm="godel", instances_checked=5, violations=0
        )
        assert report.passed
        assert set(report.to_json_dict()) == {
            "property",
            "grid",
            "tnorm",
            "instances_checked",
            "violations",
        }

    def test_failing_json_shape(self):
        report = SweepReport(
            property="demo",
            grid={},
            tnorm="godel",
            instances_checked=5,
            violations=2,
            first_counterexample={"reason": "made up"},
        )
        assert not report.passed
        doc = report.to_json_dict()
        assert doc["violations"] == 2
        assert doc["first_counterexample"] == {"reason": "made up"}


class TestLeastConsistentClosure:
    def test_crisp_two(self):
        report = verify_least_consistent_closure(CRISP2)
        assert report.passed
        assert report.instances_checked == 16

    def test_three_valued_two(self):
        report = verify_least_consistent_closure(THREE2)
        assert report.passed
        assert report.instances_checked == 81

    def test_crisp_three(self):
        report = verify_least_consistent_closure(CRISP3)
        assert report.passed
        assert report.instances_checked == 512

    def test_deterministic(self):
        a = verify_least_consistent_closure(THREE2).to_json_dict()
        b = verify_least_consistent_closure(THREE2).to_json_dict()
        assert a == b


class TestDugganIntersection:
    def test_transitive_class_pin(self):
        report = verify_crisp_duggan_intersection("r3")
        assert report.passed
        assert report.instances_checked == 400
        assert report.grid["relation_class"] == "r3"

    @pytest.mark.parametrize("c", ["r1", "r2", "any"])
    def test_other_classes(self, c):
        report = verify_crisp_duggan_intersection(c)
        assert report.passed
        assert 0 < report.instances_checked <= 512


class TestConsistencyEquivalence:
    @pytest.mark.parametrize("t", ALL)
    def test_three_valued_two(self, t):
        report = verify_consistency_equivalence(THREE2, t)
        assert report.passed
        assert report.instances_checked == 81
        assert report.tnorm == t.value

    def test_quarter_grid(self):
        grid = GridSpec(2, (0.0, 0.25, 0.5, 0.75, 1.0))
        for t in ALL:
            assert verify_consistency_equivalence(grid, t).passed


class TestAdjunctionGrid:
    @pytest.mark.parametrize("t", ALL)
    def test_quarter_step(self, t):
        report = verify_adjunction_grid(t, step=0.25)
        assert report.passed
        assert report.instances_checked == 125

    def test_tenth_step(self):
        for t in ALL:
            assert verify_adjunction_grid(t, step=0.1).passed

    def test_rejects_non_divisor_step(self):
        with pytest.raises(ValueError, match="divide"):
            verify_adjunction_grid(TNorm.GODEL, step=0.3)
