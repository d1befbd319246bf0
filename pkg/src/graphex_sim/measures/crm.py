"""
Completely random measures a * Lebesgue + sum_i w_i delta_{theta_i} on [0, T].

Jumps are drawn as a marked Poisson process: Poisson(T m_k) atoms of weight
x_k at independent uniform locations, which has the same law as pushing a
unit-rate process through the tail inverse.
"""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ..exceptions import InvalidParameterError
from .discrete import DiscreteMeasure, b_value


@dataclass(frozen=True, eq=False)
class CRMSample:
    """Drift plus atoms (theta_i, w_i), sorted by location, on [0, horizon]."""

    drift: float
    theta: np.ndarray
    weights: np.ndarray
    horizon: float

    @property
    def n_atoms(self) -> int:
        return int(self.theta.size)

    def mass(self, lo: float, hi: float) -> float:
        """mu([lo, hi))."""
        lo, hi = max(lo, 0.0), min(hi, self.horizon)
        if hi <= lo:
            return 0.0
        keep = (self.theta >= lo) & (self.theta < hi)
        return self.drift * (hi - lo) + float(self.weights[keep].sum())

    def total_mass(self) -> float:
        return self.drift * self.horizon + float(self.weights.sum())


def sample_crm(rho: DiscreteMeasure, a: float, horizon: float, rng: np.random.Generator) -> CRMSample:
    """
    Draw the CRM with Levy measure rho and drift a on [0, horizon].

    Returns:
        CRMSample; E[mu([0,T])] = T (a + integral of x d rho)
    """
    if a < 0 or horizon < 0:
        raise InvalidParameterError("drift and horizon must be non-negative")
    counts = rng.poisson(horizon * rho.masses) if rho.n_atoms else np.zeros(0, dtype=np.int64)
    weights = np.repeat(rho.locations, counts)
    theta = rng.random(weights.size) * horizon
    order = np.argsort(theta, kind="stable")
    return CRMSample(float(a), theta[order], weights[order], float(horizon))


def crm_char_function(rho: DiscreteMeasure, a: float, leb_a: float, theta: float) -> complex:
    """exp(i theta a |A| + |A| sum_k m_k (exp(i theta x_k) - 1))."""
    if leb_a < 0:
        raise InvalidParameterError("Lebesgue measure must be non-negative")
    jump_part = np.sum(rho.masses * (np.exp(1j * theta * rho.locations) - 1.0)) if rho.n_atoms else 0.0
    return complex(np.exp(1j * theta * a * leb_a + leb_a * jump_part))


class LevyTriplet(NamedTuple):
    b: float
    sigma: float
    rho: DiscreteMeasure


def levy_triplet(rho: DiscreteMeasure) -> LevyTriplet:
    """Characteristics (b, 0, rho) under the truncation h(x) = min(|x|, 1) sign(x)."""
    return LevyTriplet(b_value(rho), 0.0, rho)
