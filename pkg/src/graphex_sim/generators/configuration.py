"""
Configuration models: CM, its erased variant and the bipartite CM.

Half-edges are matched by shuffling the stub array and pairing consecutive
entries, which has the same law as pairing each half-edge in turn with a
uniformly chosen unpaired one.
"""
from typing import Tuple

import numpy as np

from ..core.multigraph import Multigraph
from ..log import get_component_logger
from .sequences import BipartiteDegrees, SequenceLike, as_degree_sequence

logger = get_component_logger("graphex_sim.generators")


def match_half_edges(ell: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Uniform perfect matching of half-edges 0..ell-1.

    Returns:
        (a, b) arrays of length ell/2; half-edge a[k] is paired with b[k]
    """
    perm = rng.permutation(ell)
    return perm[0::2], perm[1::2]


def configuration_model(d: SequenceLike, rng: np.random.Generator) -> Multigraph:
    """
    Draw CM_n(d).

    Args:
        d: Degree sequence (positive integers, even sum)
        rng: Random generator

    Returns:
        Multigraph with degree(v) = d_v, loops and multi-edges kept

    Raises:
        OddHalfEdgeSum: odd total
    """
    seq = as_degree_sequence(d)
    stubs = seq.stubs()
    a, b = match_half_edges(seq.ell, rng)
    logger.debug("CM draw", n=seq.n, half_edges=seq.ell)
    return Multigraph.from_pairs(seq.n, stubs[a], stubs[b])


def erase(graph: Multigraph) -> Multigraph:
    """Collapse multi-edges and merge multi-loops into single loops (ECM)."""
    return graph.with_unit_multiplicities()


def erased_configuration_model(d: SequenceLike, rng: np.random.Generator) -> Multigraph:
    return erase(configuration_model(d, rng))


def bipartite_configuration_model(d: BipartiteDegrees, rng: np.random.Generator) -> Multigraph:
    """
    Draw the bipartite CM: each side-1 half-edge is paired with a uniform side-2 half-edge.

    Side-1 vertices are numbered 0..n1-1 and side-2 vertices n1..n1+n2-1; the
    result records the bipartition in `sides`.

    Raises:
        UnbalancedSides: side totals differ (raised when building BipartiteDegrees)
    """
    if not isinstance(d, BipartiteDegrees):
        d = BipartiteDegrees(*d)
    stubs1 = np.repeat(np.arange(d.n1, dtype=np.int64), d.side1)
    stubs2 = d.n1 + np.repeat(np.arange(d.n2, dtype=np.int64), d.side2)
    partner = rng.permutation(stubs2.size)
    logger.debug("BipCM draw", n1=d.n1, n2=d.n2, half_edges=int(stubs2.size))
    return Multigraph.from_pairs(d.n1 + d.n2, stubs1, stubs2[partner], sides=d.sides())
