"""
Multigraphexes: parametric variants, validation, process samplers and model limits.
"""

from .limits import limit_of_bcm, limit_of_cm, limit_of_ecm, limit_of_grg, limit_of_pa
from .multigraphex import (
    Bipartite,
    BoxKernel,
    ErasedRankOne,
    ExpStar,
    Generic,
    GRGKernel,
    Multigraphex,
    PoissonExpKernel,
    PureDust,
    RankOne,
    graphex_from_dict,
    rescale,
)
from .poisson import poisson_pmf
from .samplers import draw_process, sample_adjacency, sample_gp
from .validate import ValidationReport, validate

__all__ = [
    "poisson_pmf",
    "Multigraphex",
    "RankOne",
    "ErasedRankOne",
    "GRGKernel",
    "Bipartite",
    "PureDust",
    "Generic",
    "BoxKernel",
    "PoissonExpKernel",
    "ExpStar",
    "graphex_from_dict",
    "rescale",
    "validate",
    "ValidationReport",
    "draw_process",
    "sample_gp",
    "sample_adjacency",
    "limit_of_cm",
    "limit_of_pa",
    "limit_of_ecm",
    "limit_of_grg",
    "limit_of_bcm",
]
