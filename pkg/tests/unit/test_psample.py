"""
Unit tests for p-sampling and random labeling.
"""
import math

import numpy as np
import pytest

from graphex_sim.analysis.statistics import mean_estimate
from graphex_sim.core.multigraph import Multigraph
from graphex_sim.exceptions import CollisionRetry, InvalidParameterError, RateExceedsOne
from graphex_sim.rng import seeded
from graphex_sim.sampling.psample import canonical_label, canonical_sample, label, p_sample, sampling_rate
from tests.factories import GraphFactory


class _ZeroStream:
    """Generator stand-in whose uniforms are all zero."""

    def random(self, size):
        return np.zeros(size)


class TestPSample:
    """Test Smpl(G, p)."""

    def test_p_one_drops_isolated_only(self, rng):
        """Test that p = 1 keeps every non-isolated vertex."""
        graph = Multigraph(5, [0, 1], [1, 2])

        assert p_sample(graph, 1.0, rng) == graph.drop_isolated()

    def test_p_zero_is_empty(self, rng):
        """Test that p = 0 removes everything."""
        assert p_sample(GraphFactory.cycle(10), 0.0, rng).n_vertices == 0

    @pytest.mark.parametrize("p", [-0.1, 1.5])
    def test_invalid_p(self, rng, p):
        """Test the range check on p."""
        with pytest.raises(InvalidParameterError):
            p_sample(GraphFactory.triangle(), p, rng)

    def test_no_isolated_vertices(self, rng):
        """Test that the sample never holds isolated vertices."""
        sample = p_sample(GraphFactory.path(200), 0.4, rng)

        assert np.all(sample.degrees() > 0)

    def test_mean_surviving_edges(self):
        """Test that each path edge survives with probability p^2."""
        path = GraphFactory.path(100)

        counts = [p_sample(path, 0.5, seeded(s)).non_loop_edge_count() for s in range(2000)]

        assert mean_estimate(counts).within(99 * 0.25, sigmas=4.0)


class TestCanonicalSample:
    """Test Smpl(G, t / sqrt(2 e(G)))."""

    def test_rate(self):
        """Test t / sqrt(2 e(G))."""
        assert sampling_rate(GraphFactory.path(9), 2.0) == pytest.approx(0.5)

    def test_rate_needs_edges(self):
        """Test that a graph without non-loop edges has no rate."""
        with pytest.raises(InvalidParameterError):
            sampling_rate(Multigraph.from_edges(2, {(0, 0): 1, (1, 1): 2}), 1.0)

    def test_rate_exceeds_one(self, rng):
        """Test RateExceedsOne for t > sqrt(2 e(G))."""
        triangle = GraphFactory.triangle()

        with pytest.raises(RateExceedsOne) as info:
            canonical_sample(triangle, math.sqrt(6.0) + 0.1, rng)

        assert info.value.edges == 3

    def test_full_rate(self, rng):
        """Test that t = sqrt(2 e(G)) keeps the whole graph."""
        triangle = GraphFactory.triangle()

        assert canonical_sample(triangle, math.sqrt(6.0), rng) == triangle


class TestLabel:
    """Test Lbl_s(G)."""

    def test_window_and_points(self, rng):
        """Test that every stored pair becomes a point inside the window."""
        graph = GraphFactory.loop_and_double_edge()

        xi = label(graph, 3.0, rng)

        assert xi.window == 3.0
        assert xi.n_points == graph.n_pairs
        assert xi.total_mass() == 1 + 2 * 2 + 2 * 1
        assert np.all((xi.x >= 0) & (xi.x < 3.0) & (xi.y >= 0) & (xi.y < 3.0))

    def test_collision_retry(self):
        """Test that persistent label collisions raise CollisionRetry."""
        with pytest.raises(CollisionRetry):
            label(GraphFactory.path(3), 1.0, _ZeroStream(), retry_limit=2)

    def test_invalid_window(self, rng):
        """Test that s must be positive."""
        with pytest.raises(InvalidParameterError):
            label(GraphFactory.path(3), 0.0, rng)

    def test_canonical_window(self, rng):
        """Test s = sqrt(2 e(G))."""
        assert canonical_label(GraphFactory.path(9), rng).window == pytest.approx(4.0)
