"""
Generalized random graph: pair {i, j} present with p_ij = w_i w_j / (L + w_i w_j).

Two exact samplers share the law. Small graphs use one Bernoulli vector per
row. Large graphs visit vertices in decreasing weight order and skip over
absent pairs with geometric jumps, thinning each candidate by the ratio of its
true probability to the running upper bound (the row probability is
non-increasing along the sorted order).
"""
import math
from typing import List, Literal, Optional

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError
from ..log import get_component_logger
from .sequences import SequenceLike, as_weight_sequence

logger = get_component_logger("graphex_sim.generators")

GRGMethod = Literal["auto", "pairs", "skip"]


def edge_probability(wi, wj, total_weight: float):
    prod = np.multiply(wi, wj)
    return prod / (total_weight + prod)


def _grg_pairs(w: np.ndarray, total: float, rng: np.random.Generator) -> Multigraph:
    n = w.size
    us: List[np.ndarray] = []
    vs: List[np.ndarray] = []
    for i in range(n - 1):
        p = edge_probability(w[i], w[i + 1 :], total)
        hits = np.flatnonzero(rng.random(p.size) < p)
        if hits.size:
            us.append(np.full(hits.size, i, dtype=np.int64))
            vs.append(hits + i + 1)
    if not us:
        return Multigraph.empty(n)
    return Multigraph.from_pairs(n, np.concatenate(us), np.concatenate(vs))


def _grg_skip(w: np.ndarray, total: float, rng: np.random.Generator) -> Multigraph:
    n = w.size
    order = np.argsort(-w, kind="stable")
    ws = w[order]
    us: List[int] = []
    vs: List[int] = []
    for u in range(n - 1):
        v = u + 1
        p = float(edge_probability(ws[u], ws[v], total))
        while v < n and p > 0:
            if p < 1:
                r = rng.random()
                v += int(math.floor(math.log(r) / math.log1p(-p))) if r > 0 else n
            if v < n:
                q = float(edge_probability(ws[u], ws[v], total))
                if rng.random() < q / p:
                    us.append(u)
                    vs.append(v)
                p = q
                v += 1
    if not us:
        return Multigraph.empty(n)
    return Multigraph.from_pairs(n, order[np.asarray(us)], order[np.asarray(vs)])


def generalized_random_graph(
    w: SequenceLike,
    rng: np.random.Generator,
    total_weight: Optional[float] = None,
    method: GRGMethod = "auto",
    pair_threshold: Optional[int] = None,
) -> Multigraph:
    """
    Draw GRG_n(w).

    Args:
        w: Strictly positive weights
        rng: Random generator
        total_weight: Value of L in p_ij; defaults to sum(w). Passing the full
            L_n with a subset of weights draws the induced subgraph of the
            full model on that subset.
        method: "pairs", "skip" or "auto" (pairs up to pair_threshold vertices)
        pair_threshold: Overrides settings.grg_pair_threshold

    Returns:
        Simple loop-free Multigraph
    """
    seq = as_weight_sequence(w).require_positive()
    total = seq.total if total_weight is None else float(total_weight)
    if total <= 0:
        raise InvalidParameterError("total_weight must be positive")
    if method == "auto":
        if pair_threshold is None:
            from ..config import settings

            pair_threshold = settings.grg_pair_threshold
        method = "pairs" if seq.n <= pair_threshold else "skip"
    logger.debug("GRG draw", n=seq.n, total_weight=total, method=method)
    if method == "pairs":
        return _grg_pairs(seq.weights, total, rng)
    if method == "skip":
        return _grg_skip(seq.weights, total, rng)
    raise InvalidParameterError(f"unknown GRG method: {method}")
