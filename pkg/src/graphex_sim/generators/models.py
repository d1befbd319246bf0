"""
ModelSpec: a random graph family together with its parameters.
"""
from dataclasses import dataclass
from typing import Any, Dict, Literal, Optional

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import ConfigError
from ..log import get_component_logger
from .configuration import bipartite_configuration_model, configuration_model, erased_configuration_model
from .grg import generalized_random_graph
from .preferential import preferential_attachment
from .sequences import BipartiteDegrees, DegreeSequence, WeightSequence

logger = get_component_logger("graphex_sim.generators")

Family = Literal["cm", "ecm", "pa", "grg", "bcm"]


@dataclass(frozen=True)
class ModelSpec:
    """
    One of the five generator families with validated parameters.

    Attributes:
        family: cm, ecm, pa, grg or bcm
        degrees: DegreeSequence (cm, ecm)
        weights: WeightSequence (pa delta, grg w)
        m: number of PA steps
        bipartite: BipartiteDegrees (bcm)
        simultaneous: PA endpoint convention
    """

    family: Family
    degrees: Optional[DegreeSequence] = None
    weights: Optional[WeightSequence] = None
    m: Optional[int] = None
    bipartite: Optional[BipartiteDegrees] = None
    simultaneous: bool = True

    def __post_init__(self):
        needs = {
            "cm": self.degrees,
            "ecm": self.degrees,
            "pa": self.weights,
            "grg": self.weights,
            "bcm": self.bipartite,
        }
        if self.family not in needs:
            raise ConfigError(f"unknown model family: {self.family}")
        if needs[self.family] is None:
            raise ConfigError(f"model family {self.family} is missing its sequence")
        if self.family == "pa" and (self.m is None or self.m < 1):
            raise ConfigError("pa needs m >= 1")
        if self.family == "grg":
            self.weights.require_positive()

    @classmethod
    def cm(cls, degrees) -> "ModelSpec":
        return cls("cm", degrees=DegreeSequence(np.asarray(degrees)))

    @classmethod
    def ecm(cls, degrees) -> "ModelSpec":
        return cls("ecm", degrees=DegreeSequence(np.asarray(degrees)))

    @classmethod
    def pa(cls, delta, m: int, simultaneous: bool = True) -> "ModelSpec":
        return cls("pa", weights=WeightSequence(np.asarray(delta)), m=int(m), simultaneous=simultaneous)

    @classmethod
    def grg(cls, weights) -> "ModelSpec":
        return cls("grg", weights=WeightSequence(np.asarray(weights)))

    @classmethod
    def bcm(cls, side1, side2) -> "ModelSpec":
        return cls("bcm", bipartite=BipartiteDegrees(np.asarray(side1), np.asarray(side2)))

    @property
    def n(self) -> int:
        if self.family in ("cm", "ecm"):
            return self.degrees.n
        if self.family == "bcm":
            return self.bipartite.n1 + self.bipartite.n2
        return self.weights.n

    def draw(self, rng: np.random.Generator) -> Multigraph:
        """One graph from the model."""
        if self.family == "cm":
            return configuration_model(self.degrees, rng)
        if self.family == "ecm":
            return erased_configuration_model(self.degrees, rng)
        if self.family == "pa":
            return preferential_attachment(self.weights, self.m, rng, self.simultaneous)
        if self.family == "grg":
            return generalized_random_graph(self.weights, rng)
        return bipartite_configuration_model(self.bipartite, rng)

    def describe(self) -> Dict[str, Any]:
        """Summary for reports (sizes and totals, not full sequences)."""
        out: Dict[str, Any] = {"family": self.family, "n": self.n}
        if self.degrees is not None:
            out.update(ell=self.degrees.ell, max_degree=self.degrees.max_degree)
        if self.weights is not None:
            out.update(total_weight=self.weights.total, max_weight=float(self.weights.weights.max()))
        if self.m is not None:
            out.update(m=self.m, simultaneous=self.simultaneous)
        if self.bipartite is not None:
            out.update(n1=self.bipartite.n1, n2=self.bipartite.n2, ell=self.bipartite.ell)
        return out

    def regime_warnings(self) -> Dict[str, str]:
        """Asymptotic-regime conditions that look violated at this size."""
        warnings: Dict[str, str] = {}
        if self.degrees is not None and self.degrees.max_degree > 0.1 * self.degrees.ell:
            warnings["max_degree"] = "max d_i is not small compared to l_n"
        if self.family == "pa" and self.m > 0.1 * self.weights.total**2:
            warnings["m"] = "m is not small compared to l_delta^2"
        return warnings

    def check_regime(self) -> Dict[str, str]:
        """regime_warnings(), each logged once at WARNING."""
        warnings = self.regime_warnings()
        for condition, message in warnings.items():
            logger.warning("Model outside the sparse regime", family=self.family, condition=condition, detail=message)
        return warnings
