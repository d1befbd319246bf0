"""
Sampling protocol: p-sampling, labeling, adjacency measures.
"""

from .adjacency import AdjacencyMeasure, IntervalUnion, count, extract_graph
from .psample import canonical_label, canonical_sample, label, p_sample, sampling_rate

__all__ = [
    "AdjacencyMeasure",
    "IntervalUnion",
    "count",
    "extract_graph",
    "p_sample",
    "sampling_rate",
    "canonical_sample",
    "label",
    "canonical_label",
]
