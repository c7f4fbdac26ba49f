import pytest

from percop.graphs import Graph, complete_graph
from percop.periodic import PeriodicGraph, constant
from percop.corners import (
    CornerWitness,
    find_k_temporal_corners,
    find_temporal_corners,
    validate_witness,
)
from percop.constructions import circulant_123
from percop.search import load_witness
from conftest import random_periodic


def fig2_instance():
    g0 = Graph(3, [(0, 1), (1, 2)])
    g1 = Graph(3, [(0, 1), (0, 2)])
    return PeriodicGraph([g0, g1])


class TestTemporalCorners:
    def test_fig2_witness(self):
        ws = find_temporal_corners(fig2_instance())
        assert CornerWitness(0, 2, (0,)) in ws

    def test_complete_graph_every_pair(self):
        pg = constant(complete_graph(4), 1)
        ws = find_temporal_corners(pg)
        assert len(ws) == 4 * 3

    def test_reconstructed_thm112_has_none(self):
        pg, _meta = load_witness("thm112")
        assert find_temporal_corners(pg) == []

    def test_witnesses_revalidate(self, rng):
        for _ in range(20):
            pg = random_periodic(rng, rng.randint(2, 6), rng.randint(1, 3))
            for w in find_temporal_corners(pg):
                assert validate_witness(pg, w)


CIRC_STEPS = [5, 2, 3, 1, 4]


class TestKTemporalCorners:
    def test_circulant_has_no_2_corner(self):
        pg = circulant_123(CIRC_STEPS).instance
        assert find_k_temporal_corners(pg, 2) == []

    def test_circulant_3_corner_matches_strategy(self):
        pg = circulant_123(CIRC_STEPS).instance
        ws = find_k_temporal_corners(pg, 3)
        assert any(w.t == 3 and w.covers == (0, 2, 9) for w in ws)

    def test_k1_equals_plain_detector(self, rng):
        for _ in range(15):
            pg = random_periodic(rng, rng.randint(2, 5), rng.randint(1, 3))
            assert find_k_temporal_corners(pg, 1) == find_temporal_corners(pg)

    def test_monotone_extension(self, rng):
        for _ in range(15):
            pg = random_periodic(rng, 5, 2)
            ws1 = {(w.t, w.corner_vertex) for w in find_k_temporal_corners(pg, 1)}
            ws2 = find_k_temporal_corners(pg, 2)
            have2 = {(w.t, w.corner_vertex) for w in ws2}
            # every 1-corner extends: add any unused vertex to its cover
            assert ws1 <= have2

    def test_corner_vertex_never_in_cover(self, rng):
        pg = random_periodic(rng, 5, 2)
        for k in (1, 2, 3):
            for w in find_k_temporal_corners(pg, k):
                assert w.corner_vertex not in w.covers
                assert validate_witness(pg, w)

    def test_budget_error(self):
        pg = constant(complete_graph(12), 4)
        with pytest.raises(ValueError, match="budget"):
            find_k_temporal_corners(pg, 6, budget=10**4)

    def test_k_must_be_positive(self, rng):
        with pytest.raises(ValueError):
            find_k_temporal_corners(random_periodic(rng, 4, 1), 0)


class TestNecessityBoundary:
    def test_saturated_placement_escapes_necessity_without_connectivity(self):
        """Two cops on the edgeless 2-vertex instance win at placement, yet
        no 2-corner exists (no vertex lies outside the cover).  Corner
        necessity is therefore scoped to temporally connected instances."""
        from percop.solver import is_k_copwin

        pg = constant(Graph(2), 1)
        assert is_k_copwin(pg, 2).copwin
        assert find_k_temporal_corners(pg, 2) == []

    def test_connected_two_vertex_instances_have_corners(self):
        from percop.solver import is_k_copwin

        for snaps in (
            [Graph(2, [(0, 1)])],
            [Graph(2, [(0, 1)]), Graph(2)],
            [Graph(2), Graph(2, [(0, 1)])],
        ):
            pg = PeriodicGraph(snaps)
            assert is_k_copwin(pg, 2).copwin
            assert find_k_temporal_corners(pg, 2) != []

    def test_necessity_on_connected_random_corpus(self, rng):
        from percop.periodic import is_temporally_connected
        from percop.solver import is_k_copwin

        checked = 0
        for _ in range(150):
            pg = random_periodic(rng, rng.randint(2, 7), rng.randint(1, 3), 0.4)
            if not is_temporally_connected(pg):
                continue
            checked += 1
            for k in (1, 2):
                if is_k_copwin(pg, k).copwin:
                    assert find_k_temporal_corners(pg, k), (pg.snapshots, k)
        assert checked > 50
