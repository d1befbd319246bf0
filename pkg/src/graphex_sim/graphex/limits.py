"""
Finite-n graphex surrogates for the five models.

The empirical measure is split at the hub threshold tau: atoms above tau form
the Levy measure, the first moment of the atoms at or below tau becomes the
drift a.
"""
import math
from typing import Optional, Tuple

import numpy as np

from ..generators.sequences import (
    BipartiteDegrees,
    SequenceLike,
    as_degree_sequence,
    as_weight_sequence,
)
from ..log import get_component_logger
from ..measures.discrete import DiscreteMeasure, empirical_measure, kernel_mass, split_at
from .multigraphex import Bipartite, ErasedRankOne, GRGKernel, RankOne

logger = get_component_logger("graphex_sim.graphex.limits")


def _threshold(hub_threshold: Optional[float]) -> float:
    if hub_threshold is None:
        from ..config import settings

        return settings.hub_threshold
    return float(hub_threshold)


def _split(rho: DiscreteMeasure, hub_threshold: Optional[float]) -> Tuple[DiscreteMeasure, float]:
    tau = _threshold(hub_threshold)
    hubs, a = split_at(rho, tau)
    logger.debug("Split empirical measure", tau=tau, hub_atoms=hubs.n_atoms, a=a)
    return hubs, a


def limit_of_cm(d: SequenceLike, hub_threshold: Optional[float] = None) -> RankOne:
    """RankOne{rho_n above tau, a = low mass at tau} for CM_n(d)."""
    seq = as_degree_sequence(d)
    hubs, a = _split(empirical_measure(seq.degrees, seq.ell), hub_threshold)
    return RankOne(hubs, a)


def limit_of_pa(delta: SequenceLike, m: int, hub_threshold: Optional[float] = None) -> RankOne:
    """
    RankOne over rho_{n,delta}, built from the expected degrees (2m / l_delta) delta_i
    normalized by 2m.
    """
    seq = as_weight_sequence(delta)
    expected = 2.0 * m * seq.weights / seq.total
    if m > 0.1 * seq.total**2:
        logger.warning("PA outside the m = o(l_delta^2) regime", m=m, l_delta=seq.total)
    hubs, a = _split(empirical_measure(expected, 2.0 * m), hub_threshold)
    return RankOne(hubs, a)


def limit_of_ecm(d: SequenceLike, hub_threshold: Optional[float] = None) -> ErasedRankOne:
    """ErasedRankOne with c = double integral of 1 - exp(-xy) against rho_n x rho_n."""
    seq = as_degree_sequence(d)
    rho = empirical_measure(seq.degrees, seq.ell)
    hubs, a = _split(rho, hub_threshold)
    return ErasedRankOne(hubs, a, kernel_mass(rho, "ecm"))


def limit_of_grg(w: SequenceLike, hub_threshold: Optional[float] = None) -> GRGKernel:
    """GRGKernel with C = double integral of xy / (1 + xy) against rho_w x rho_w."""
    seq = as_weight_sequence(w).require_positive()
    rho = empirical_measure(seq.weights, seq.total)
    hubs, a = _split(rho, hub_threshold)
    return GRGKernel(hubs, a, kernel_mass(rho, "grg"))


def bipartite_side_measure(degrees: np.ndarray, ell: int) -> DiscreteMeasure:
    """Atoms d_i / sqrt(l/2) with mass 1 / sqrt(l) per vertex."""
    locations, counts = np.unique(np.asarray(degrees, dtype=np.float64), return_counts=True)
    return DiscreteMeasure(locations / math.sqrt(ell / 2.0), counts / math.sqrt(ell))


def limit_of_bcm(d: BipartiteDegrees, hub_threshold: Optional[float] = None) -> Bipartite:
    """
    Bipartite graphex whose cross-pair rate w_i w_j equals the matching rate d_i d_j / (l/2).
    """
    if not isinstance(d, BipartiteDegrees):
        d = BipartiteDegrees(*d)
    hubs1, a1 = _split(bipartite_side_measure(d.side1, d.ell), hub_threshold)
    hubs2, a2 = _split(bipartite_side_measure(d.side2, d.ell), hub_threshold)
    return Bipartite(hubs1, hubs2, a1, a2)
