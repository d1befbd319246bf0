"""
Unit tests for multigraphex validation.
"""
import pytest

from graphex_sim.exceptions import ValidationFailure
from graphex_sim.graphex.multigraphex import (
    Bipartite,
    BoxKernel,
    ExpStar,
    Generic,
    PoissonExpKernel,
    PureDust,
    RankOne,
)
from graphex_sim.graphex.validate import validate
from graphex_sim.measures.discrete import DiscreteMeasure

ATOM = DiscreteMeasure.from_atoms([(0.5, 3.0)])


class TestParametric:
    """Test the closed-form variants."""

    @pytest.mark.parametrize("graphex", [RankOne(ATOM, 1.0), Bipartite(ATOM, ATOM, 0.5, 0.5), PureDust(0.3)])
    def test_always_valid(self, graphex):
        """Test that atomic variants pass analytically."""
        report = validate(graphex, resolution=32)

        assert report.passed
        assert report.method == "analytic"
        assert len(report.profile_mu) == 32

    def test_profile_tracks_mu(self):
        """Test that the reported profile starts at mu_W(0)."""
        report = validate(RankOne(ATOM), resolution=16)

        assert report.profile_x[0] == 0.0
        assert report.profile_mu[0] == pytest.approx(float(RankOne(ATOM).mu_w(0.0)))


class TestGeneric:
    """Test the quadrature checks."""

    def test_constant_kernel_fails(self):
        """Test that W = 1 everywhere violates a, b and c."""
        report = validate(Generic(BoxKernel(1.0)), resolution=64, raise_on_failure=False)

        assert report.failed == ["a", "b", "c"]
        assert report.method == "quadrature"

    def test_raises(self):
        """Test ValidationFailure with the failing conditions."""
        with pytest.raises(ValidationFailure) as info:
            validate(Generic(BoxKernel(1.0)), resolution=64)

        assert info.value.conditions == ["a", "b", "c"]
        assert info.value.report["pass"] is False

    @pytest.mark.parametrize(
        "graphex",
        [
            Generic(BoxKernel(1.0, 1.0), feature_cutoff=2.0),
            Generic(PoissonExpKernel(2.0), star=ExpStar(1.0), feature_cutoff=20.0),
        ],
    )
    def test_integrable_kernels_pass(self, graphex):
        """Test a bounded box and an exponentially decaying kernel."""
        assert validate(graphex, resolution=128).passed

    def test_flat_star_fails(self):
        """Test that a star rate that never decays violates the star condition."""
        graphex = Generic(BoxKernel(1.0, 1.0), star=ExpStar(1.0, 0.0), feature_cutoff=2.0)

        assert validate(graphex, resolution=128, raise_on_failure=False).failed == ["star"]

    def test_resolution_from_settings(self, isolated_settings):
        """Test that the grid size defaults to settings.validation_resolution."""
        isolated_settings.validation_resolution = 40

        report = validate(Generic(BoxKernel(1.0, 1.0), feature_cutoff=2.0))

        assert len(report.profile_x) == 40

    def test_report_dict(self):
        """Test the serialized report fields."""
        data = validate(Generic(BoxKernel(1.0)), resolution=16, raise_on_failure=False).to_dict()

        assert data["type"] == "generic"
        assert data["failed"] == ["a", "b", "c"]
        assert set(data["mu_profile"]) == {"x", "mu"}
