"""
Unit tests for the configuration models (CM, erased CM, bipartite CM).
"""
import numpy as np
import pytest
from scipy.stats import chisquare

from graphex_sim.analysis.statistics import mean_estimate
from graphex_sim.exceptions import OddHalfEdgeSum, UnbalancedSides
from graphex_sim.generators.configuration import (
    bipartite_configuration_model,
    configuration_model,
    erase,
    erased_configuration_model,
    match_half_edges,
)
from graphex_sim.generators.sequences import BipartiteDegrees
from graphex_sim.rng import seeded
from tests.factories import SequenceFactory


def _all_matchings(points):
    """Every perfect matching of `points` as a frozenset of sorted pairs."""
    if not points:
        return [frozenset()]
    first, rest = points[0], points[1:]
    out = []
    for i, partner in enumerate(rest):
        for tail in _all_matchings(rest[:i] + rest[i + 1 :]):
            out.append(tail | {(first, partner)})
    return out


def _matching_key(a, b):
    return frozenset((min(x, y), max(x, y)) for x, y in zip(a.tolist(), b.tolist()))


class TestMatching:
    """Test the half-edge matching."""

    def test_perfect_matching(self, rng):
        """Test that every half-edge is used exactly once."""
        a, b = match_half_edges(100, rng)

        assert a.size == b.size == 50
        assert sorted(np.concatenate([a, b]).tolist()) == list(range(100))

    def test_uniform_over_matchings(self, rng):
        """Test that all 105 matchings of 8 half-edges are equally likely (chi-square)."""
        matchings = _all_matchings(list(range(8)))
        counts = dict.fromkeys(matchings, 0)

        for _ in range(21_000):
            a, b = match_half_edges(8, rng)
            counts[_matching_key(a, b)] += 1

        assert len(matchings) == 105
        assert len(counts) == 105
        assert chisquare(list(counts.values())).pvalue > 1e-4

    def test_cm_graph_law(self, rng):
        """Test that d = (1, 1, 2) gives an edge plus a loop with probability 1/3."""
        hits = [configuration_model([1, 1, 2], rng).loop_count() for _ in range(6000)]

        assert mean_estimate(hits).within(1.0 / 3.0, sigmas=4.0)


class TestConfigurationModel:
    """Test CM_n(d)."""

    def test_degrees_preserved(self, rng):
        """Test that the drawn graph realizes d exactly, loops counted twice."""
        d = SequenceFactory.create(n=200, max_degree=6)

        graph = configuration_model(d, rng)

        assert graph.degrees().tolist() == d.tolist()
        assert graph.total_half_edges() == int(d.sum())

    def test_reproducible(self):
        """Test that the same stream gives the same graph."""
        d = SequenceFactory.create(n=50)

        assert configuration_model(d, seeded(3)) == configuration_model(d, seeded(3))

    def test_odd_sum(self, rng):
        """Test OddHalfEdgeSum."""
        with pytest.raises(OddHalfEdgeSum):
            configuration_model([1, 1, 1], rng)

    def test_leaves_form_a_matching(self, rng):
        """Test that all-ones degrees give a perfect matching without loops."""
        graph = configuration_model(SequenceFactory.leaves(40), rng)

        assert graph.loop_count() == 0
        assert graph.non_loop_edge_count() == 20

    def test_expected_loops(self):
        """Test E[loops] = sum d_i (d_i - 1) / (2 (l_n - 1)) for 2-regular degrees."""
        d = np.full(50, 2)
        expected = float(np.sum(d * (d - 1))) / (2.0 * (d.sum() - 1))

        loops = [configuration_model(d, seeded(s)).loop_count() for s in range(2000)]
        estimate = mean_estimate(loops)

        assert estimate.within(expected, sigmas=4.0)


class TestErasedConfigurationModel:
    """Test the erased CM."""

    def test_simple_support(self, rng):
        """Test that all multiplicities are one and degrees do not exceed d."""
        d = SequenceFactory.create(n=60, max_degree=8)

        graph = erased_configuration_model(d, rng)

        assert np.all(graph.mult == 1)
        assert np.all(graph.degrees() <= d)

    def test_erase_same_stream(self):
        """Test that ECM is the erasure of the CM drawn from the same stream."""
        d = SequenceFactory.create(n=30)

        assert erased_configuration_model(d, seeded(9)) == erase(configuration_model(d, seeded(9)))


class TestBipartiteConfigurationModel:
    """Test the bipartite CM."""

    def test_edges_cross_sides(self, rng):
        """Test that every edge joins the two sides and degrees are realized."""
        d = BipartiteDegrees(np.array([3, 2, 1]), np.array([1, 1, 2, 2]))

        graph = bipartite_configuration_model(d, rng)

        assert graph.loop_count() == 0
        assert np.all(graph.u < 3) and np.all(graph.v >= 3)
        assert graph.degrees().tolist() == [3, 2, 1, 1, 1, 2, 2]
        assert graph.sides.tolist() == [0, 0, 0, 1, 1, 1, 1]

    def test_tuple_input(self, rng):
        """Test that a (side1, side2) tuple is accepted."""
        graph = bipartite_configuration_model((np.array([1, 1]), np.array([2])), rng)

        assert graph.edges == {(0, 2): 1, (1, 2): 1}

    def test_unbalanced(self, rng):
        """Test UnbalancedSides."""
        with pytest.raises(UnbalancedSides):
            bipartite_configuration_model((np.array([2]), np.array([1])), rng)
