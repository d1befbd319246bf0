"""
Tail-regularity statistic of a finite multigraph.

Measures how much of the degree mass sits on vertices of degree at most
delta * sqrt(e(G)), the part that becomes dust and stars in the limit.
"""
import math

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError


def tail_regularity_deficit(graph: Multigraph, delta: float) -> float:
    """
    (1/e(G)) * sum of d_v over vertices with d_v <= delta * sqrt(e(G)).

    Loops count twice towards d_v. The value is twice the fraction of
    half-edges sitting on low-degree vertices when loops are rare.
    """
    if delta <= 0:
        raise InvalidParameterError("delta must be positive")
    edges = graph.non_loop_edge_count()
    if edges < 1:
        raise InvalidParameterError("tail regularity needs e(G) >= 1")
    degrees = graph.degrees()
    low = degrees <= delta * math.sqrt(edges)
    return float(np.sum(degrees[low])) / edges
