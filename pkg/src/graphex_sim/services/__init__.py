"""
Replicate execution for Monte Carlo experiments.

Runs replicate bodies over a thread pool with per-replicate random streams.
"""

from .runner import ReplicateRunner

__all__ = ["ReplicateRunner"]
