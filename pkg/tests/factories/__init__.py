"""Test data factories for graphex-sim.

Factories provide:

- Consistent, seeded test data
- Named graph shapes and degree families
- Reusable building blocks for fixtures
- Clear, readable test code

Usage:
    from tests.factories import GraphFactory, SequenceFactory

    def test_example():
        graph = GraphFactory.create(n=10, degree=2)
        assert graph.total_half_edges() == 20
"""

from .base_factory import BaseFactory
from .graph_factory import GraphFactory
from .sequence_factory import SequenceFactory

__all__ = [
    "BaseFactory",
    "GraphFactory",
    "SequenceFactory",
]
