"""
Unit tests for counter-based streams and the replicate runner.
"""
import pytest

from graphex_sim.rng import derive_key, experiment_key, replicate_stream, seeded
from graphex_sim.services.runner import ReplicateRunner


def first_draw(rng):
    return float(rng.random())


class TestStreams:
    """Test stream derivation."""

    def test_experiment_key_stable(self):
        """Test that keys depend on both the seed and the experiment id."""
        assert experiment_key(1, "census") == experiment_key(1, "census")
        assert experiment_key(1, "census") != experiment_key(2, "census")
        assert experiment_key(1, "census") != experiment_key(1, "blocks")

    def test_replicates_differ(self):
        """Test that replicates of one key draw different numbers."""
        key = experiment_key(5, "x")

        assert first_draw(replicate_stream(key, 0)) != first_draw(replicate_stream(key, 1))
        assert first_draw(replicate_stream(key, 3)) == first_draw(replicate_stream(key, 3))

    def test_negative_replicate(self):
        """Test the replicate index check."""
        with pytest.raises(ValueError):
            replicate_stream((1, 2), -1)

    def test_derive_key(self):
        """Test that derived keys follow the parent stream."""
        assert derive_key(seeded(3)) == derive_key(seeded(3))


class TestReplicateRunner:
    """Test ReplicateRunner."""

    def test_thread_independence(self):
        """Test identical results for one and four threads across several chunks."""
        key = experiment_key(11, "runner")

        serial = ReplicateRunner(threads=1).run(first_draw, 700, key)
        threaded = ReplicateRunner(threads=4).run(first_draw, 700, key)

        assert serial == threaded
        assert serial[300] == first_draw(replicate_stream(key, 300))

    def test_partials(self):
        """Test one partial per chunk in replicate order."""
        runner = ReplicateRunner(threads=2)

        partials = runner.run_partial(lambda rng: 1, 600, (1, 1), initial=lambda: 0, fold=lambda acc, x: acc + x)

        assert partials == [256, 256, 88]

    def test_status(self):
        """Test the replicate counters."""
        runner = ReplicateRunner(threads=1)
        runner.run(first_draw, 10, (0, 0))

        assert runner.status() == {"threads": 1, "submitted": 10, "completed": 10}

    def test_threads_from_settings(self, isolated_settings):
        """Test that the default thread count comes from settings."""
        isolated_settings.threads = 3

        assert ReplicateRunner().threads == 3

    @pytest.mark.parametrize("threads", [0, -2])
    def test_invalid_threads(self, threads):
        """Test that at least one thread is required."""
        with pytest.raises(ValueError):
            ReplicateRunner(threads=threads)

    def test_zero_reps(self, runner):
        """Test an empty run."""
        assert runner.run(first_draw, 0, (0, 0)) == []
