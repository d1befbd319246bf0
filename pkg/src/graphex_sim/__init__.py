"""
graphex-sim - sparse random multigraphs and their graphex limits.

Generators for configuration, erased configuration, preferential attachment,
generalized random graph and bipartite configuration models; the sampling and
labeling protocol; multigraphex samplers and finite-n limits; Monte Carlo
verification of the convergence statements.
"""
from .config import settings
from .core import Census, Multigraph, canonical_key, census_of
from .generators import ModelSpec
from .graphex import sample_gp, validate

__version__ = "0.1.0"
__all__ = ["Census", "ModelSpec", "Multigraph", "canonical_key", "census_of", "sample_gp", "settings", "validate"]
