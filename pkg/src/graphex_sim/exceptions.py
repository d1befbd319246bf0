"""Exception hierarchy for graphex-sim."""
from typing import Any, Dict, List, Optional


class GraphexSimError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(GraphexSimError, ValueError):
    """A precondition on an argument does not hold."""


class OddHalfEdgeSum(InvalidParameterError):
    """Degree sequence has an odd number of half-edges."""


class UnbalancedSides(InvalidParameterError):
    """Bipartite degree sequences have different half-edge totals."""


class RateExceedsOne(InvalidParameterError):
    """Canonical sampling rate t/sqrt(2e(G)) is larger than one."""

    def __init__(self, rate: float, t: float, edges: int):
        self.rate = rate
        self.t = t
        self.edges = edges
        super().__init__(
            f"sampling rate t/sqrt(2e) = {rate:.6g} exceeds 1 (t={t}, e(G)={edges})"
        )


class TooLargeForCanonicalization(GraphexSimError):
    """Graph has more vertices than the canonicalization ceiling."""

    def __init__(self, n_vertices: int, limit: int):
        self.n_vertices = n_vertices
        self.limit = limit
        super().__init__(f"graph with {n_vertices} vertices exceeds key_vertex_limit={limit}")


class CollisionRetry(GraphexSimError):
    """Two vertices received the same real label; the labeling must be redrawn."""


class ValidationFailure(GraphexSimError):
    """A multigraphex violates one or more integrability conditions."""

    def __init__(self, conditions: List[str], report: Optional[Dict[str, Any]] = None):
        self.conditions = list(conditions)
        self.report = report or {}
        super().__init__(f"multigraphex violates condition(s): {', '.join(self.conditions)}")


class TruncationBudgetExceeded(GraphexSimError):
    """Expected edge mass beyond the feature cutoff is above the allowed budget."""

    def __init__(self, estimate: float, budget: float):
        self.estimate = estimate
        self.budget = budget
        super().__init__(
            f"estimated missed edges beyond feature cutoff {estimate:.3g} exceed budget {budget:.3g}"
        )


class ConfigError(GraphexSimError):
    """Invalid experiment configuration or unreadable input file."""
