"""
Graphex process samplers.

GP_t of a graphex rescaled by kappa has the law of GP_{t/sqrt(kappa)} of the
unscaled graphex, so every sampler works at the effective time t/sqrt(kappa)
with the base (unscaled) parameters.

Parametric variants are drawn through their rank-one structure: latent
vertices of weight x_k arrive as Poisson(t m_k), pairs are joined with
Poisson(w_i w_j) multiplicity (Bernoulli for the erased and GRG kernels),
each vertex sprouts Poisson(t a w_i) pendant leaves and Poisson(t^2 I)
isolated edges are added. Star leaves and dust endpoints are fresh vertices.
"""
import math
from typing import List, Optional

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError, TruncationBudgetExceeded
from ..log import get_component_logger
from ..measures.discrete import DiscreteMeasure
from ..sampling.adjacency import AdjacencyMeasure
from ..sampling.psample import label
from .multigraphex import Bipartite, ErasedRankOne, Generic, GRGKernel, Multigraphex, PureDust, RankOne

logger = get_component_logger("graphex_sim.graphex.samplers")


class _GraphBuilder:
    """Accumulates vertices and edges of one process draw."""

    def __init__(self):
        self.n = 0
        self.sides: List[np.ndarray] = []
        self.us: List[np.ndarray] = []
        self.vs: List[np.ndarray] = []
        self.ms: List[np.ndarray] = []

    def add_vertices(self, count: int, side: int = 0) -> np.ndarray:
        ids = np.arange(self.n, self.n + count, dtype=np.int64)
        self.n += count
        self.sides.append(np.full(count, side, dtype=np.int8))
        return ids

    def add_edges(self, u: np.ndarray, v: np.ndarray, mult: Optional[np.ndarray] = None) -> None:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        m = np.ones(u.size, dtype=np.int64) if mult is None else np.asarray(mult, dtype=np.int64)
        keep = m > 0
        self.us.append(u[keep])
        self.vs.append(v[keep])
        self.ms.append(m[keep])

    def add_stars(self, centers: np.ndarray, counts: np.ndarray, side: int = 0, mult: int = 1) -> None:
        total = int(counts.sum())
        if total == 0:
            return
        leaves = self.add_vertices(total, side)
        self.add_edges(np.repeat(centers, counts), leaves, np.full(total, mult))

    def add_dust(self, count: int, mult: int = 1, sides=(0, 0)) -> None:
        if count == 0:
            return
        left = self.add_vertices(count, sides[0])
        right = self.add_vertices(count, sides[1])
        self.add_edges(left, right, np.full(count, mult))

    def build(self, bipartite: bool = False) -> Multigraph:
        if not self.us:
            u = v = m = np.empty(0, dtype=np.int64)
        else:
            u, v, m = np.concatenate(self.us), np.concatenate(self.vs), np.concatenate(self.ms)
        sides = np.concatenate(self.sides) if (bipartite and self.sides) else None
        if bipartite and sides is None:
            sides = np.empty(0, dtype=np.int8)
        return Multigraph(self.n, u, v, m, sides)


def _latent_weights(rho: DiscreteMeasure, t: float, rng: np.random.Generator) -> np.ndarray:
    if rho.is_empty or t == 0:
        return np.empty(0)
    return np.repeat(rho.locations, rng.poisson(t * rho.masses))


def _pair_edges(builder: _GraphBuilder, ids: np.ndarray, w: np.ndarray, kind: str, rng: np.random.Generator) -> None:
    n = ids.size
    if n == 0:
        return
    iu, ju = np.triu_indices(n, 1)
    z = w[iu] * w[ju]
    zd = np.square(w) / 2.0
    if kind == "poisson":
        builder.add_edges(ids[iu], ids[ju], rng.poisson(z))
        builder.add_edges(ids, ids, rng.poisson(zd))
    elif kind == "erased":
        builder.add_edges(ids[iu], ids[ju], (rng.random(z.size) < -np.expm1(-z)).astype(np.int64))
        builder.add_edges(ids, ids, (rng.random(n) < -np.expm1(-zd)).astype(np.int64))
    else:
        builder.add_edges(ids[iu], ids[ju], (rng.random(z.size) < z / (1.0 + z)).astype(np.int64))


def _draw_rank_one(graphex, t: float, rng: np.random.Generator, pair_kind: str) -> Multigraph:
    builder = _GraphBuilder()
    w = _latent_weights(graphex.rho, t, rng)
    ids = builder.add_vertices(w.size)
    _pair_edges(builder, ids, w, pair_kind, rng)
    if graphex.a > 0:
        builder.add_stars(ids, rng.poisson(t * graphex.a * w))
        builder.add_dust(int(rng.poisson(t * t * graphex.a**2 / 2.0)))
    return builder.build()


def _draw_bipartite(graphex: Bipartite, t: float, rng: np.random.Generator) -> Multigraph:
    builder = _GraphBuilder()
    w1 = _latent_weights(graphex.rho1, t, rng)
    w2 = _latent_weights(graphex.rho2, t, rng)
    ids1 = builder.add_vertices(w1.size, 0)
    ids2 = builder.add_vertices(w2.size, 1)
    if w1.size and w2.size:
        mult = rng.poisson(np.outer(w1, w2))
        i, j = np.nonzero(mult)
        builder.add_edges(ids1[i], ids2[j], mult[i, j])
    if graphex.a2 > 0:
        builder.add_stars(ids1, rng.poisson(t * graphex.a2 * w1), side=1)
    if graphex.a1 > 0:
        builder.add_stars(ids2, rng.poisson(t * graphex.a1 * w2), side=0)
    builder.add_dust(int(rng.poisson(t * t * graphex.a1 * graphex.a2)), sides=(0, 1))
    return builder.build(bipartite=True)


def _sample_from_pmf(pmf: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Row-wise inverse-CDF draws; leftover mass goes to the last column."""
    cdf = np.cumsum(pmf, axis=1)
    u = rng.random(pmf.shape[0])
    return np.minimum((u[:, None] >= cdf).sum(axis=1), pmf.shape[1] - 1)


def _multiplicity_pmf(graphex: Generic, x: np.ndarray, y: np.ndarray, max_multiplicity: int) -> np.ndarray:
    return np.column_stack([np.broadcast_to(graphex.kernel(x, y, k), x.shape) for k in range(max_multiplicity + 1)])


def _draw_generic(
    graphex: Generic, t: float, rng: np.random.Generator, budget: Optional[float], max_multiplicity: Optional[int]
) -> Multigraph:
    from ..config import settings

    budget = settings.truncation_budget if budget is None else budget
    max_multiplicity = settings.max_multiplicity if max_multiplicity is None else max_multiplicity
    missed = t * t * graphex.tail_mass
    if missed > budget:
        raise TruncationBudgetExceeded(missed, budget)

    builder = _GraphBuilder()
    cutoff = graphex.feature_cutoff
    features = rng.random(int(rng.poisson(t * cutoff))) * cutoff
    ids = builder.add_vertices(features.size)
    if features.size:
        iu, ju = np.triu_indices(features.size, 1)
        if iu.size:
            builder.add_edges(
                ids[iu], ids[ju], _sample_from_pmf(_multiplicity_pmf(graphex, features[iu], features[ju], max_multiplicity), rng)
            )
        builder.add_edges(ids, ids, _sample_from_pmf(_multiplicity_pmf(graphex, features, features, max_multiplicity), rng))
        builder.add_stars(ids, rng.poisson(t * np.asarray(graphex.star(features), dtype=float)))
        for k, fn in sorted(graphex.multi_stars.items()):
            builder.add_stars(ids, rng.poisson(t * np.asarray(fn(features), dtype=float)), mult=int(k))
    builder.add_dust(int(rng.poisson(t * t * graphex.dust)))
    for k, rate in sorted(graphex.multi_dust.items()):
        builder.add_dust(int(rng.poisson(t * t * rate)), mult=int(k))
    return builder.build()


def draw_process(
    graphex: Multigraphex,
    t: float,
    rng: np.random.Generator,
    budget: Optional[float] = None,
    max_multiplicity: Optional[int] = None,
) -> Multigraph:
    """
    One draw of the process on [0, t]^2, isolated latent vertices included.
    """
    if t < 0:
        raise InvalidParameterError("t must be non-negative")
    t_eff = t / math.sqrt(graphex.kappa)
    if t == 0:
        return Multigraph.empty(0)
    if isinstance(graphex, PureDust):
        builder = _GraphBuilder()
        builder.add_dust(int(rng.poisson(t * t * graphex.dust)))
        return builder.build()
    if isinstance(graphex, RankOne):
        return _draw_rank_one(graphex, t_eff, rng, "poisson")
    if isinstance(graphex, ErasedRankOne):
        return _draw_rank_one(graphex, t_eff, rng, "erased")
    if isinstance(graphex, GRGKernel):
        return _draw_rank_one(graphex, t_eff, rng, "grg")
    if isinstance(graphex, Bipartite):
        return _draw_bipartite(graphex, t_eff, rng)
    if isinstance(graphex, Generic):
        return _draw_generic(graphex, t_eff, rng, budget, max_multiplicity)
    raise InvalidParameterError(f"unsupported graphex: {type(graphex).__name__}")


def sample_gp(graphex: Multigraphex, t: float, rng: np.random.Generator, **kwargs) -> Multigraph:
    """
    Draw GP_t(graphex): the unlabeled multigraph on [0, t]^2 without isolated vertices.

    Raises:
        TruncationBudgetExceeded: Generic graphex with too much mass beyond its cutoff
    """
    return draw_process(graphex, t, rng, **kwargs).drop_isolated()


def sample_adjacency(graphex: Multigraphex, t: float, rng: np.random.Generator, **kwargs) -> AdjacencyMeasure:
    """
    Same draw as sample_gp with uniform [0, t) labels kept for every vertex.
    """
    graph = sample_gp(graphex, t, rng, **kwargs)
    if t == 0:
        return AdjacencyMeasure.empty(0.0)
    return label(graph, t, rng)
