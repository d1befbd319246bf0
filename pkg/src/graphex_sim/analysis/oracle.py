"""
Probability that the GRG adjacency measure has no point in a square window.

The oracle side averages the closed-form conditional no-edge probability

    exp(-a^2 r^2 / 2) * prod_{u<v} 1 / (1 + w_u w_v) * exp(-a r sum_u w_u)

over Poisson draws of the latent weights (intensity r * rho restricted to
[eps_cut, inf)). The empirical side labels GRG_n(w) at scale sqrt(L_n) and keeps
the vertices whose label falls in [0, r), which is the induced subgraph of the
full model on a Bernoulli(r / sqrt(L_n)) vertex subset.
"""
import math
from typing import Optional

import numpy as np

from ..exceptions import InvalidParameterError
from ..generators.grg import edge_probability
from ..generators.sequences import SequenceLike, as_weight_sequence
from ..graphex.poisson import poisson_pmf
from ..log import get_component_logger
from ..measures.discrete import DiscreteMeasure
from ..services.runner import ReplicateRunner
from .statistics import MeanEstimate, mean_estimate

logger = get_component_logger("graphex_sim.analysis.oracle")

_CHUNK = 4096


def grg_zero_point_oracle(
    rho: DiscreteMeasure,
    a: float,
    t: float,
    eps_cut: float,
    mc_reps: int,
    rng: np.random.Generator,
) -> MeanEstimate:
    """
    Monte Carlo value of P(xi([0, t)^2) = 0) for the GRG graphex (rho, a).

    Args:
        rho: Levy measure of the weights
        a: Drift (star and dust part)
        t: Window side
        eps_cut: Atoms below eps_cut are dropped
        mc_reps: Poisson weight draws
        rng: Random generator

    Returns:
        MeanEstimate of the averaged no-edge probability
    """
    if t < 0 or a < 0:
        raise InvalidParameterError("t and a must be non-negative")
    dust = math.exp(-0.5 * a * a * t * t)
    keep = rho.locations >= eps_cut
    x, m = rho.locations[keep], rho.masses[keep]
    if x.size == 0 or t == 0:
        return MeanEstimate(dust, 0.0, mc_reps)
    if mc_reps < 1:
        raise InvalidParameterError("mc_reps must be >= 1")

    pair_logs = np.log1p(np.outer(x, x))
    self_logs = np.diag(pair_logs)
    values = []
    for start in range(0, mc_reps, _CHUNK):
        size = min(_CHUNK, mc_reps - start)
        counts = rng.poisson(t * m, size=(size, x.size)).astype(np.float64)
        # sum over unordered pairs u < v of log(1 + w_u w_v), grouped by atom
        pair_sum = 0.5 * (np.einsum("rk,kl,rl->r", counts, pair_logs, counts) - counts @ self_logs)
        star = a * t * (counts @ x)
        values.append(dust * np.exp(-pair_sum - star))
    estimate = mean_estimate(np.concatenate(values))
    logger.debug("GRG zero-point oracle", t=t, atoms=x.size, reps=mc_reps, value=estimate.mean)
    return estimate


def single_atom_zero_probability(location: float, mass: float, t: float, tol: float = 1e-15) -> float:
    """
    Closed form for rho = mass * delta_location and a = 0:
    sum_N Poisson(N; t mass) (1 + location^2)^(-N(N-1)/2).
    """
    lam = t * mass
    log_factor = math.log1p(location * location)
    total, n = 0.0, 0
    while True:
        term = poisson_pmf(n, lam) * math.exp(-0.5 * n * (n - 1) * log_factor)
        total += term
        if n > lam and term < tol:
            return total
        n += 1


def grg_zero_point_probability(
    w: SequenceLike,
    r: float,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
) -> MeanEstimate:
    """
    Empirical P(xi_n([0, r)^2) = 0) for xi_n = Lbl_{sqrt(L_n)}(GRG_n(w)).

    Raises:
        InvalidParameterError: r > sqrt(L_n)
    """
    seq = as_weight_sequence(w).require_positive()
    total = seq.total
    p_keep = r / math.sqrt(total)
    if not 0.0 <= p_keep <= 1.0:
        raise InvalidParameterError(f"window {r} exceeds sqrt(L_n)")
    weights = seq.weights

    def one(rep_rng: np.random.Generator) -> float:
        kept = weights[rep_rng.random(weights.size) < p_keep]
        if kept.size < 2:
            return 1.0
        iu, ju = np.triu_indices(kept.size, 1)
        p = edge_probability(kept[iu], kept[ju], total)
        return 0.0 if np.any(rep_rng.random(p.size) < p) else 1.0

    runner = runner or ReplicateRunner()
    return mean_estimate(runner.run_from(one, reps, rng))
