"""
Unit tests for preferential attachment with fitness.
"""
import numpy as np
import pytest

from graphex_sim.analysis.statistics import mean_estimate
from graphex_sim.exceptions import InvalidParameterError
from graphex_sim.generators.preferential import expected_pa_degrees, preferential_attachment, urn_owners
from graphex_sim.rng import seeded


class TestPreferentialAttachment:
    """Test PA_n(delta, m)."""

    def test_half_edge_total(self, rng):
        """Test that m steps give 2m half-edges."""
        graph = preferential_attachment(np.ones(20), 37, rng)

        assert graph.total_half_edges() == 74
        assert graph.n_vertices == 20

    def test_zero_fitness_vertex_stays_isolated(self, rng):
        """Test that delta_i = 0 vertices never receive an edge."""
        delta = np.array([1.0, 0.0, 2.0, 0.0])

        graph = preferential_attachment(delta, 200, rng)

        assert graph.degrees()[[1, 3]].tolist() == [0, 0]

    def test_single_vertex_only_loops(self, rng):
        """Test that a one-vertex urn produces m loops."""
        graph = preferential_attachment([1.0], 10, rng)

        assert graph.loop_count() == 10
        assert graph.non_loop_edge_count() == 0

    @pytest.mark.parametrize("m", [0, -3])
    def test_invalid_m(self, rng, m):
        """Test that m must be positive."""
        with pytest.raises(InvalidParameterError):
            preferential_attachment([1.0, 1.0], m, rng)

    def test_invalid_delta(self, rng):
        """Test negative fitness."""
        with pytest.raises(InvalidParameterError):
            preferential_attachment([1.0, -1.0], 5, rng)

    @pytest.mark.parametrize("simultaneous", [True, False])
    def test_expected_degree(self, simultaneous):
        """Test E[deg_i] = 2 m delta_i / l_delta under both urn conventions."""
        delta = np.array([1.0, 1.0, 2.0])
        m = 20
        target = expected_pa_degrees(delta, m)[2]

        degrees = [preferential_attachment(delta, m, seeded(s), simultaneous).degrees()[2] for s in range(3000)]

        assert target == pytest.approx(20.0)
        assert mean_estimate(degrees).within(target, sigmas=4.0)


class TestUrnOwners:
    """Test the pointer-resolution urn."""

    def test_first_ball_is_fresh(self):
        """Test that the first step draws from delta alone."""
        delta = np.array([0.0, 1.0])

        owners = urn_owners(delta, 2, seeded(1))

        assert owners.tolist() == [1, 1]

    def test_owner_range(self, rng):
        """Test that owners are valid vertex indices with positive fitness."""
        delta = np.array([0.5, 0.0, 3.0, 1.0])

        owners = urn_owners(delta, 1000, rng, simultaneous=False)

        assert owners.min() >= 0 and owners.max() <= 3
        assert not np.any(owners == 1)
