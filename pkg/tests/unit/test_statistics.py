"""
Unit tests for mean estimates, characteristic functions and TV distances.
"""
import math

import numpy as np
import pytest

from graphex_sim.analysis.statistics import empirical_char_function, mean_estimate
from graphex_sim.analysis.tv import tv_against_pmf, tv_between
from graphex_sim.core.census import Census
from graphex_sim.exceptions import InvalidParameterError


def census_of_keys(counts):
    census = Census()
    for key, count in counts.items():
        for _ in range(count):
            census.record(key)
    return census


class TestMeanEstimate:
    """Test MeanEstimate."""

    def test_values(self):
        """Test mean, sample standard deviation and standard error."""
        estimate = mean_estimate([1.0, 2.0, 3.0])

        assert estimate.mean == 2.0
        assert estimate.std == pytest.approx(1.0)
        assert estimate.stderr == pytest.approx(1.0 / math.sqrt(3.0))

    def test_within(self):
        """Test the sigma band and the additive slack."""
        estimate = mean_estimate([1.0, 2.0, 3.0])

        assert estimate.within(3.0, sigmas=2.0)
        assert not estimate.within(3.5, sigmas=2.0)
        assert estimate.within(3.5, sigmas=2.0, slack=0.5)

    def test_empty(self):
        """Test that no samples give an infinite standard error."""
        estimate = mean_estimate([])

        assert estimate.n == 0
        assert math.isnan(estimate.mean)
        assert estimate.stderr == math.inf

    def test_dict(self):
        """Test the 95% interval in the serialized form."""
        data = mean_estimate(np.array([2.0, 2.0])).to_dict()

        assert data["ci95"] == [2.0, 2.0]


class TestCharFunction:
    """Test empirical characteristic functions."""

    def test_constant_samples(self):
        """Test that a point mass at zero gives 1 with no error."""
        estimate = empirical_char_function([0.0, 0.0], 3.0)

        assert estimate.value == 1.0
        assert estimate.stderr == 0.0

    def test_two_points(self):
        """Test cancellation at theta = pi."""
        estimate = empirical_char_function([0.0, 1.0], math.pi)

        assert estimate.distance(0.0) == pytest.approx(0.0, abs=1e-12)
        assert estimate.stderr == pytest.approx(math.sqrt(0.5))


class TestTVBetween:
    """Test the census-to-census TV."""

    def test_identical(self, rng):
        """Test zero distance for equal censuses."""
        census = census_of_keys({b"a": 30, b"b": 10})

        estimate = tv_between(census, census, rng, resamples=50)

        assert estimate.value == 0.0
        assert estimate.half_width >= 0.0

    def test_disjoint(self, rng):
        """Test distance one for disjoint supports."""
        estimate = tv_between(census_of_keys({b"a": 5}), census_of_keys({b"b": 7}), rng, resamples=20)

        assert estimate.value == 1.0
        assert estimate.ci == (1.0, 1.0)

    def test_partial_overlap(self):
        """Test half the L1 distance of the frequencies."""
        estimate = tv_between(census_of_keys({b"a": 3, b"b": 1}), census_of_keys({b"a": 1, b"b": 1}), resamples=0)

        assert estimate.value == pytest.approx(0.25)
        assert math.isnan(estimate.half_width)

    def test_empty(self):
        """Test that both sides need observations."""
        with pytest.raises(InvalidParameterError):
            tv_between(Census(), census_of_keys({b"a": 1}))


class TestTVAgainstPmf:
    """Test the TV against an exact pmf."""

    def test_match(self):
        """Test zero distance when frequencies equal the pmf."""
        assert tv_against_pmf({0: 5, 1: 5}, {0: 0.5, 1: 0.5}) == 0.0

    def test_unobserved_mass_counts(self):
        """Test that reference mass on unseen outcomes is included."""
        assert tv_against_pmf({0: 10}, {0: 0.5, 1: 0.5}) == pytest.approx(0.5)

    def test_callable_pmf(self):
        """Test a pmf given as a function."""
        assert tv_against_pmf({0: 4}, lambda k: 0.25) == pytest.approx(0.75)

    def test_empty(self):
        """Test that the empirical side must be non-empty."""
        with pytest.raises(InvalidParameterError):
            tv_against_pmf({}, {0: 1.0})
