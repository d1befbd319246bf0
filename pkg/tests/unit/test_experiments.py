"""
Unit tests for the Monte Carlo experiments.
"""
import numpy as np
import pytest

from graphex_sim.analysis.experiments import (
    census_run,
    char_function_check,
    convergence_experiment,
    crm_char_function_check,
    edge_fraction_report,
    null_experiment,
    quenched_annealed_gap,
    rescaling_experiment,
    sampling_equivalence_experiment,
)
from graphex_sim.analysis.statistics import mean_estimate
from graphex_sim.exceptions import InvalidParameterError, ValidationFailure
from graphex_sim.generators.models import ModelSpec
from graphex_sim.graphex.multigraphex import BoxKernel, Generic, PureDust
from graphex_sim.graphex.samplers import sample_gp
from graphex_sim.measures.discrete import DiscreteMeasure
from graphex_sim.rng import seeded
from graphex_sim.services.runner import ReplicateRunner
from tests.factories import GraphFactory


class TestCensusRun:
    """Test census collection."""

    def test_thread_independent(self):
        """Test that the census does not depend on the thread count."""
        draw = lambda r: sample_gp(PureDust(1.0), 1.0, r)  # noqa: E731

        serial = census_run(draw, 600, seeded(1), ReplicateRunner(threads=1))
        threaded = census_run(draw, 600, seeded(1), ReplicateRunner(threads=4))

        assert serial.counts == threaded.counts
        assert serial.total == 600


class TestConvergence:
    """Test model-versus-graphex comparisons."""

    def test_matching_to_dust(self, runner):
        """Test that a perfect matching converges to pure dust with I = 1/2."""
        result = convergence_experiment(
            ModelSpec.cm(np.ones(5000, dtype=int)), PureDust(0.5), 1.0, 3000, seeded(2), threshold=0.1, runner=runner
        )

        assert result.report.passed is True
        assert result.report.to_dict()["experiment"] == "convergence"

    def test_invalid_graphex(self, runner):
        """Test that the graphex is validated first."""
        with pytest.raises(ValidationFailure):
            convergence_experiment(ModelSpec.cm([1, 1]), Generic(BoxKernel(1.0)), 1.0, 10, seeded(3), runner=runner)

    def test_null(self, runner):
        """Test that the null report carries its own reference."""
        result = null_experiment(ModelSpec.cm(np.ones(200, dtype=int)), 1.0, 300, seeded(4), runner=runner)

        assert result.report.reference == pytest.approx(2.0 * result.tv.half_width)
        assert isinstance(result.report.passed, bool)

    def test_rescaling_factor(self, runner):
        """Test the factor check."""
        with pytest.raises(InvalidParameterError):
            rescaling_experiment(PureDust(1.0), 0.0, 1.0, 10, seeded(5), runner=runner)

    def test_rescaling_dust(self, runner):
        """Test that rescaled dust matches dust at t / sqrt(c)."""
        result = rescaling_experiment(PureDust(1.0), 4.0, 2.0, 1000, seeded(6), threshold=0.1, runner=runner)

        assert result.report.passed is True

    def test_sampling_window(self, runner):
        """Test that r must not exceed sqrt(2 e(G))."""
        with pytest.raises(InvalidParameterError):
            sampling_equivalence_experiment(GraphFactory.triangle(), 3.0, 10, seeded(7), runner=runner)


class TestQuenchedGap:
    """Test the quenched/annealed spread."""

    def test_shape(self, runner):
        """Test one inner estimate per outer draw."""
        result = quenched_annealed_gap(
            ModelSpec.cm(np.ones(100, dtype=int)), (0.0, 1.0), (1.0, 2.0), 0, 5, 20, seeded(8), runner
        )

        assert result.estimates.shape == (5,)
        assert np.all((result.estimates >= 0) & (result.estimates <= 1))
        assert result.max_gap >= 0

    def test_reps_checked(self, runner):
        """Test that both replicate counts must be positive."""
        with pytest.raises(InvalidParameterError):
            quenched_annealed_gap(ModelSpec.cm([1, 1]), (0.0, 1.0), (0.0, 1.0), 0, 0, 5, seeded(9), runner)


class TestCharFunctions:
    """Test the characteristic-function checks."""

    def test_sequence_path(self, runner, reference_degrees):
        """Test Y_n(1) of the reference family against the CRM closed form."""
        rows = char_function_check(reference_degrees, 1.0, [0.5, 2.0], 2000, seeded(10), runner)

        assert all(row.passed for row in rows)
        assert rows[0].tolerance > 0.005

    def test_crm(self, runner):
        """Test sample_crm against its own closed form."""
        rho = DiscreteMeasure.from_atoms([(0.5, 2.0), (2.0, 0.25)])

        rows = crm_char_function_check(rho, 0.3, 1.0, [1.0], 3000, seeded(11), slack=0.01, runner=runner)

        assert rows[0].passed
        assert rows[0].to_dict()["passed"] is True


class TestEdgeFractionReport:
    """Test range reports."""

    @pytest.mark.parametrize("lo,hi,passed", [(0.4, 0.6, True), (0.6, 0.7, False)])
    def test_range(self, lo, hi, passed):
        """Test the pass flag against the range."""
        report = edge_fraction_report("cm_edges", mean_estimate([0.5, 0.5]), lo, hi, {})

        assert report.passed is passed
        assert report.details["range"] == [lo, hi]
