"""
p-sampling and random labeling of finite multigraphs.
"""
import math
from typing import Optional

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import CollisionRetry, InvalidParameterError, RateExceedsOne
from ..log import get_component_logger
from .adjacency import AdjacencyMeasure

logger = get_component_logger("graphex_sim.sampling")


def p_sample(graph: Multigraph, p: float, rng: np.random.Generator) -> Multigraph:
    """
    Keep each vertex independently with probability p, take the induced
    multigraph and delete isolated vertices.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"p must lie in [0, 1], got {p}")
    keep = rng.random(graph.n_vertices) < p
    return graph.induced(keep).drop_isolated()


def sampling_rate(graph: Multigraph, t: float) -> float:
    """t / sqrt(2 e(G))."""
    edges = graph.non_loop_edge_count()
    if edges < 1:
        raise InvalidParameterError("canonical sampling needs at least one non-loop edge")
    return t / math.sqrt(2.0 * edges)


def canonical_sample(graph: Multigraph, t: float, rng: np.random.Generator) -> Multigraph:
    """
    Smpl(G, t / sqrt(2 e(G))).

    Raises:
        RateExceedsOne: t / sqrt(2 e(G)) > 1
    """
    if t < 0:
        raise InvalidParameterError("t must be non-negative")
    rate = sampling_rate(graph, t)
    if rate > 1.0:
        raise RateExceedsOne(rate, t, graph.non_loop_edge_count())
    return p_sample(graph, rate, rng)


def label(
    graph: Multigraph, s: float, rng: np.random.Generator, retry_limit: Optional[int] = None
) -> AdjacencyMeasure:
    """
    Random labeling Lbl_s(G): i.i.d. uniform [0, s) labels per vertex.

    Args:
        graph: Multigraph (isolated vertices get labels but no points)
        s: Window size
        rng: Random generator
        retry_limit: Redraws allowed on a label collision (settings.label_retry_limit)

    Returns:
        AdjacencyMeasure with one point per stored vertex pair

    Raises:
        CollisionRetry: labels still collide after retry_limit redraws
    """
    if s <= 0:
        raise InvalidParameterError("window s must be positive")
    if retry_limit is None:
        from ..config import settings

        retry_limit = settings.label_retry_limit
    for _ in range(retry_limit + 1):
        labels = rng.random(graph.n_vertices) * s
        if np.unique(labels).size == labels.size:
            return AdjacencyMeasure(labels[graph.u], labels[graph.v], graph.mult, s)
        logger.debug("Label collision, redrawing", n=graph.n_vertices)
    raise CollisionRetry(f"label collision persisted after {retry_limit} redraws")


def canonical_label(graph: Multigraph, rng: np.random.Generator) -> AdjacencyMeasure:
    """Lbl_s(G) with s = sqrt(2 e(G))."""
    return label(graph, math.sqrt(2.0 * graph.non_loop_edge_count()), rng)
