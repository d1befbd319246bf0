"""
Preferential attachment with vertex fitness delta (urn form).

At step l the urn holds, for every vertex i, mass delta_i plus one ball per
half-edge already attached to i (total l_delta + 2l). Two balls are drawn with
replacement and an edge joins their owners. A ball either comes from the
delta part (probability l_delta / (l_delta + 2l)) or copies the owner of a
uniformly chosen earlier ball, so owners are resolved through a pointer array.
"""
import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError
from ..log import get_component_logger
from .sequences import SequenceLike, as_weight_sequence

logger = get_component_logger("graphex_sim.generators")


def _resolve(pointer: np.ndarray) -> np.ndarray:
    """Follow pointer[k] < k (or pointer[k] == k at roots) until fixed points."""
    while True:
        nxt = pointer[pointer]
        if np.array_equal(nxt, pointer):
            return pointer
        pointer = nxt


def urn_owners(delta: np.ndarray, balls: int, rng: np.random.Generator, simultaneous: bool = True) -> np.ndarray:
    """
    Owner vertex of each of `balls` urn draws.

    Ball k belongs to step k // 2. In the simultaneous variant both balls of a
    step see the urn before the step; otherwise the second ball also sees the
    first.
    """
    ell_delta = float(delta.sum())
    k = np.arange(balls, dtype=np.int64)
    visible = 2 * (k // 2) if simultaneous else k
    fresh = rng.random(balls) < ell_delta / (ell_delta + visible)

    pointer = k.copy()
    stale = ~fresh
    pointer[stale] = np.floor(rng.random(int(stale.sum())) * visible[stale]).astype(np.int64)

    cdf = np.cumsum(delta)
    roots = np.minimum(np.searchsorted(cdf, rng.random(balls) * cdf[-1], side="right"), delta.size - 1)
    return roots[_resolve(pointer)]


def preferential_attachment(
    delta: SequenceLike, m: int, rng: np.random.Generator, simultaneous: bool = True
) -> Multigraph:
    """
    Draw PA_n(delta, m).

    Args:
        delta: Non-negative fitness values with positive total
        m: Number of edges to add (>= 1)
        rng: Random generator
        simultaneous: Draw both endpoints before updating the urn

    Returns:
        Multigraph with total_half_edges == 2m; equal draws form loops
    """
    seq = as_weight_sequence(delta)
    m = int(m)
    if m < 1:
        raise InvalidParameterError("m must be >= 1")
    owners = urn_owners(seq.weights, 2 * m, rng, simultaneous)
    logger.debug("PA draw", n=seq.n, m=m, simultaneous=simultaneous)
    return Multigraph.from_pairs(seq.n, owners[0::2], owners[1::2])


def expected_pa_degrees(delta: SequenceLike, m: int) -> np.ndarray:
    """Mean degree after m steps: (2m / l_delta) * delta_i."""
    seq = as_weight_sequence(delta)
    return 2.0 * m * seq.weights / seq.total
