import itertools

import pytest

from percop.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from percop.periodic import constant, footprint
from percop.solver import cop_number, verify_policy
from percop.treewidth import (
    TreeDecomposition,
    bag_strategy,
    exact_treewidth,
    is_smooth,
    smooth,
    validate_decomposition,
)
from percop.constructions import bowtie_221, q3_rotation
from conftest import random_connected_graph, random_temporally_connected


def width_at_most(g, k):
    """Independent decision procedure: DFS over elimination orderings that
    only ever removes vertices of current fill-degree <= k."""
    n = g.n
    adjs = [set(g.open_nbrs(v)) for v in range(n)]

    def rec(adjs, alive, memo, key):
        if len(alive) <= k + 1:
            return True
        if key in memo:
            return memo[key]
        ok = False
        for v in sorted(alive):
            nb = adjs[v] & alive
            if len(nb) <= k:
                new_alive = alive - {v}
                new_adjs = [set(a) for a in adjs]
                for a in nb:
                    new_adjs[a] |= nb - {a}
                    new_adjs[a].discard(v)
                for a in new_alive:
                    new_adjs[a].discard(v)
                if rec(new_adjs, new_alive, memo, frozenset(new_alive)):
                    ok = True
                    break
        memo[key] = ok
        return ok

    return rec(adjs, frozenset(range(n)), {}, frozenset(range(n)))


class TestExactTreewidth:
    def test_trees_are_width_one(self):
        for n in (2, 5, 9):
            w, td = exact_treewidth(path_graph(n))
            assert w == 1
            assert validate_decomposition(td, path_graph(n)) is None

    def test_clique(self):
        w, _ = exact_treewidth(complete_graph(11))
        assert w == 10

    def test_petersen_is_four(self):
        g = petersen_graph()
        w, td = exact_treewidth(g)
        assert w == 4
        assert validate_decomposition(td, g) is None
        assert not width_at_most(g, 3)
        assert width_at_most(g, 4)

    def test_cycles_are_width_two(self):
        for n in (3, 4, 6):
            w, _ = exact_treewidth(cycle_graph(n))
            assert w == (1 if n < 3 else 2)

    def test_limit(self):
        with pytest.raises(ValueError):
            exact_treewidth(Graph(14))

    def test_random_matches_decision_oracle(self, rng):
        for _ in range(15):
            g = random_connected_graph(rng, rng.randint(3, 7), 0.45)
            w, td = exact_treewidth(g)
            assert validate_decomposition(td, g) is None
            assert td.width == w
            assert width_at_most(g, w)
            if w > 1:
                assert not width_at_most(g, w - 1)

    def test_disconnected(self):
        g = Graph(5, [(0, 1), (2, 3), (3, 4), (2, 4)])
        w, td = exact_treewidth(g)
        assert w == 2
        assert validate_decomposition(td, g) is None


class TestSmooth:
    def check(self, g):
        w, td = exact_treewidth(g)
        std = smooth(td, g)
        assert std.width == w
        assert is_smooth(std)
        assert validate_decomposition(std, g) is None
        for a, b in std.tree_edges:
            assert len(std.bags[a]) == w + 1
            assert len(std.bags[a] & std.bags[b]) == w
        return std

    def test_single_bag_k4(self):
        g = complete_graph(4)
        _w, td = exact_treewidth(g)
        std = smooth(td, g)
        assert len(std.bags) == 1 and len(std.bags[0]) == 4

    def test_already_smooth_path_decomposition(self):
        g = path_graph(4)
        td = TreeDecomposition(
            bags=[frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})],
            tree_edges=[(0, 1), (1, 2)],
        )
        std = smooth(td, g)
        assert is_smooth(std) and std.width == 1

    def test_petersen(self):
        self.check(petersen_graph())

    def test_random(self, rng):
        for _ in range(15):
            self.check(random_connected_graph(rng, rng.randint(2, 8), 0.4))

    def test_invalid_input_rejected(self):
        g = path_graph(3)
        bad = TreeDecomposition(bags=[frozenset({0, 1})], tree_edges=[])
        with pytest.raises(ValueError, match="invalid input decomposition"):
            smooth(bad, g)

    def test_cutset_separation(self, rng):
        # shared vertices of adjacent bags separate the two sides
        for _ in range(10):
            g = random_connected_graph(rng, rng.randint(4, 8), 0.4)
            w, td = exact_treewidth(g)
            std = smooth(td, g)
            for a, b in std.tree_edges:
                cut = std.bags[a] & std.bags[b]
                side_a, side_b = _sides(std, a, b)
                rest_mask = 0
                for v in range(g.n):
                    if v not in cut:
                        rest_mask |= 1 << v
                # no edge may run between the two sides outside the cutset
                for u, v in g.edges:
                    if u in cut or v in cut:
                        continue
                    assert not (
                        (u in side_a and v in side_b)
                        or (u in side_b and v in side_a)
                    )


def _sides(td, a, b):
    def comp(root, banned):
        seen = {banned, root}
        stack = [root]
        verts = set()
        while stack:
            x = stack.pop()
            verts |= set(td.bags[x])
            for u, v in td.tree_edges:
                for nxt, cur in ((u, v), (v, u)):
                    if cur == x and nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
        return verts

    cut = td.bags[a] & td.bags[b]
    return comp(a, b) - cut, comp(b, a) - cut


class TestBagStrategy:
    def run_bag_strategy(self, pg):
        foot = footprint(pg)
        w, td = exact_treewidth(foot)
        policy = bag_strategy(pg, smooth(td, foot))
        return w, verify_policy(pg, policy)

    def test_bowtie_three_cops(self):
        pg = bowtie_221().instance
        w, verdict = self.run_bag_strategy(pg)
        assert w == 2
        assert verdict.wins

    def test_q3_rotation_four_cops(self):
        pg = q3_rotation().instance
        w, verdict = self.run_bag_strategy(pg)
        assert w == 3
        assert verdict.wins
        assert cop_number(pg) == 3 <= w + 1

    def test_tree_footprints_two_cops(self, rng):
        from percop.graphs import spanning_tree_cover
        from percop.periodic import PeriodicGraph

        for _ in range(10):
            base = random_connected_graph(rng, rng.randint(3, 7))
            tree = spanning_tree_cover(base)[0]
            snaps = [tree]
            for _ in range(rng.randint(1, 2)):
                keep = [e for e in tree.sorted_edges() if rng.random() < 0.7]
                snaps.append(Graph(tree.n, keep))
            pg = PeriodicGraph(snaps)
            w, verdict = self.run_bag_strategy(pg)
            assert w == 1
            assert verdict.wins

    def test_requires_smooth(self):
        pg = bowtie_221().instance
        foot = footprint(pg)
        _w, td = exact_treewidth(foot)
        if not is_smooth(td):
            with pytest.raises(ValueError, match="smooth"):
                bag_strategy(pg, td)

    def test_random_corpus(self, rng):
        for _ in range(10):
            pg = random_temporally_connected(rng, rng.randint(4, 7), rng.randint(2, 3))
            w, verdict = self.run_bag_strategy(pg)
            assert verdict.wins
            assert cop_number(pg) <= w + 1

    def test_petersen_footprint_five_cops_cross_check(self, rng):
        # bag strategy win at width+1 = 5 agrees with the solver at k = 5
        from percop.graphs import PETERSEN_EDGES
        from percop.periodic import PeriodicGraph
        from percop.solver import is_k_copwin

        pet = petersen_graph()
        snaps = [pet]
        for _ in range(2):
            keep = [e for e in PETERSEN_EDGES if rng.random() < 0.55]
            snaps.append(Graph(10, keep))
        pg = PeriodicGraph(snaps)
        assert footprint(pg).edges == pet.edges
        w, verdict = self.run_bag_strategy(pg)
        assert w == 4 and verdict.wins
        assert is_k_copwin(pg, 5).copwin
