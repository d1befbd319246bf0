"""
Statistical identities checked at full Monte Carlo size.

These runs take minutes; select them with `pytest -m slow`.
"""
import pytest

from graphex_sim.analysis.experiments import rescaling_experiment, sampling_equivalence_experiment
from graphex_sim.cli.suite import fixed_graph, run_suite, select_criteria
from graphex_sim.graphex.limits import limit_of_cm
from graphex_sim.rng import seeded


@pytest.mark.slow
class TestLawIdentities:
    """Test distributional identities of sampling, labeling and rescaling."""

    def test_sampling_equals_labeling(self, runner):
        """Test that labeled windows and p-samples of a fixed graph agree in law."""
        result = sampling_equivalence_experiment(fixed_graph(), 1.0, 20_000, seeded(1), 0.03, runner)

        assert result.report.passed, result.report.to_dict()

    def test_rescaling(self, runner, reference_degrees):
        """Test GP_t of a rescaled graphex against GP_{t / sqrt(c)}."""
        result = rescaling_experiment(limit_of_cm(reference_degrees), 4.0, 1.0, 20_000, seeded(2), 0.05, runner)

        assert result.report.passed, result.report.to_dict()


@pytest.mark.slow
class TestReducedSuite:
    """Test acceptance criteria at a tenth of their replicate budget."""

    @pytest.mark.parametrize("criterion", ["1", "2", "4", "7", "9", "10", "13", "16"])
    def test_criterion(self, runner, criterion):
        """Test that the criterion passes in a reduced run."""
        (outcome,) = run_suite(select_criteria(criterion), 20240611, runner, reduced=True)

        assert outcome["pass"], outcome
