"""
Core graph types: multigraphs, canonical keys and censuses.
"""

from .canonical import OVERSIZE_KEY, CanonicalKey, canonical_key
from .census import Census, census_of, classify
from .multigraph import Multigraph, drop_isolated, non_loop_edge_count, total_half_edges

__all__ = [
    "Multigraph",
    "non_loop_edge_count",
    "total_half_edges",
    "drop_isolated",
    "CanonicalKey",
    "canonical_key",
    "OVERSIZE_KEY",
    "Census",
    "census_of",
    "classify",
]
