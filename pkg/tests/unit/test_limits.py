"""
Unit tests for the finite-n limit graphexes.
"""
import math

import numpy as np
import pytest

from graphex_sim.generators.sequences import BipartiteDegrees
from graphex_sim.graphex.limits import (
    bipartite_side_measure,
    limit_of_bcm,
    limit_of_cm,
    limit_of_ecm,
    limit_of_grg,
    limit_of_pa,
)
from graphex_sim.measures.discrete import DiscreteMeasure
from tests.factories import SequenceFactory


class TestRankOneLimits:
    """Test the CM and PA limits."""

    def test_cm_split(self, reference_degrees):
        """Test that hubs become atoms and leaves become drift."""
        graphex = limit_of_cm(reference_degrees)

        assert graphex.rho.locations.tolist() == pytest.approx([1.0])
        assert graphex.rho.masses.tolist() == pytest.approx([0.5])
        assert graphex.a == pytest.approx(0.5)

    def test_pa_matches_cm(self, reference_degrees):
        """Test that PA with 2m = l_delta has the CM limit of the same sequence."""
        cm = limit_of_cm(reference_degrees)
        pa = limit_of_pa(reference_degrees.astype(float), 5000)

        assert np.allclose(pa.rho.locations, cm.rho.locations)
        assert np.allclose(pa.rho.masses, cm.rho.masses)
        assert pa.a == pytest.approx(cm.a)

    def test_threshold_from_settings(self, isolated_settings, reference_degrees):
        """Test that the hub threshold defaults to settings.hub_threshold."""
        isolated_settings.hub_threshold = 2.0

        graphex = limit_of_cm(reference_degrees)

        assert graphex.rho.is_empty
        assert graphex.a == pytest.approx(1.0)

    def test_explicit_threshold(self, reference_degrees):
        """Test that a threshold below the leaf atom keeps every atom."""
        graphex = limit_of_cm(reference_degrees, hub_threshold=0.001)

        assert graphex.rho.n_atoms == 2
        assert graphex.a == 0.0


class TestNormalizedLimits:
    """Test the erased CM and GRG limits."""

    def test_ecm_constant(self):
        """Test c = double integral of 1 - exp(-xy) for a regular sequence."""
        graphex = limit_of_ecm(np.ones(4, dtype=int))

        assert graphex.c == pytest.approx(4.0 * (1.0 - math.exp(-0.25)))
        assert graphex.rho.atoms == [(pytest.approx(0.5), pytest.approx(2.0))]

    def test_grg_constant(self):
        """Test C = double integral of xy / (1 + xy) over the full measure."""
        graphex = limit_of_grg(np.full(4, 2.0), hub_threshold=0.1)

        # rho_w: one atom at 2 / sqrt(8) with mass 4 / sqrt(8)
        x, m = 2.0 / math.sqrt(8.0), 4.0 / math.sqrt(8.0)
        assert graphex.C == pytest.approx(m * m * x * x / (1.0 + x * x))
        assert graphex.a == 0.0


class TestBipartiteLimit:
    """Test the bipartite CM limit."""

    def test_side_measure(self):
        """Test atoms d_i / sqrt(l/2) of mass 1 / sqrt(l)."""
        measure = bipartite_side_measure(np.array([2, 2]), 8)

        assert measure == DiscreteMeasure.from_atoms([(1.0, 2.0 / math.sqrt(8.0))])

    def test_reference(self):
        """Test hubs at sqrt(2) of mass 1/4 and leaf drift 25 / sqrt(5000) per side."""
        graphex = limit_of_bcm(BipartiteDegrees(*SequenceFactory.bipartite_reference()))

        for side in (1, 2):
            assert graphex.side_measure(side).locations.tolist() == pytest.approx([math.sqrt(2.0)])
            assert graphex.side_measure(side).masses.tolist() == pytest.approx([0.25])
        assert graphex.a1 == pytest.approx(25.0 / math.sqrt(5000.0))

    def test_hub_pair_rate(self):
        """Test that w_i w_j equals d_i d_j / (l/2) for two hubs."""
        graphex = limit_of_bcm(SequenceFactory.bipartite_reference())

        rate = graphex.rho1.locations[-1] * graphex.rho2.locations[-1]

        assert rate == pytest.approx(100 * 100 / 5000)
