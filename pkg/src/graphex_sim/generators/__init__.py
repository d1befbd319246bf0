"""
Random multigraph generators.
"""

from .configuration import (
    bipartite_configuration_model,
    configuration_model,
    erase,
    erased_configuration_model,
    match_half_edges,
)
from .grg import edge_probability, generalized_random_graph
from .models import ModelSpec
from .preferential import expected_pa_degrees, preferential_attachment
from .sequences import (
    BipartiteDegrees,
    DegreeSequence,
    WeightSequence,
    expand_family,
    read_sequence,
    write_sequence,
)

__all__ = [
    "DegreeSequence",
    "WeightSequence",
    "BipartiteDegrees",
    "expand_family",
    "read_sequence",
    "write_sequence",
    "match_half_edges",
    "configuration_model",
    "erase",
    "erased_configuration_model",
    "bipartite_configuration_model",
    "preferential_attachment",
    "expected_pa_degrees",
    "generalized_random_graph",
    "edge_probability",
    "ModelSpec",
]
