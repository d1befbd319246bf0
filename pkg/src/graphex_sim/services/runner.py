"""
ReplicateRunner for Monte Carlo replicate loops.

Runs independent replicates over a thread pool. Each replicate receives its own
counter-based stream, so results do not depend on the number of threads.
"""
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, TypeVar

import numpy as np

from ..log import get_component_logger
from ..rng import StreamKey, derive_key, replicate_stream

logger = get_component_logger("graphex_sim.services.runner")

T = TypeVar("T")
A = TypeVar("A")

# Replicates handed to a worker at once
_CHUNK = 256


class ReplicateRunner:
    """
    Executes `fn(rng)` for replicates 0..reps-1.

    Replicates are grouped in fixed chunks and dispatched to a ThreadPoolExecutor.
    Results come back in replicate order.
    """

    def __init__(self, threads: Optional[int] = None):
        """
        Initialize the runner.

        Args:
            threads: Worker threads; defaults to settings.threads
        """
        if threads is None:
            from ..config import settings

            threads = settings.threads
        if threads < 1:
            raise ValueError("threads must be >= 1")
        self.threads = threads
        self.submitted = 0
        self.completed = 0
        self._lock = threading.Lock()

    def run(self, fn: Callable[[np.random.Generator], T], reps: int, key: StreamKey) -> List[T]:
        """
        Run `reps` replicates.

        Args:
            fn: Replicate body, called with the replicate's generator
            reps: Number of replicates
            key: Stream key of the experiment

        Returns:
            list of replicate results, result[r] from replicate_stream(key, r)
        """
        if reps < 0:
            raise ValueError("reps must be non-negative")

        def run_chunk(start: int) -> List[T]:
            stop = min(start + _CHUNK, reps)
            out = [fn(replicate_stream(key, r)) for r in range(start, stop)]
            with self._lock:
                self.completed += stop - start
            return out

        chunks = self._dispatch(run_chunk, reps)
        return [item for chunk in chunks for item in chunk]

    def run_partial(
        self,
        fn: Callable[[np.random.Generator], T],
        reps: int,
        key: StreamKey,
        initial: Callable[[], A],
        fold: Callable[[A, T], A],
    ) -> List[A]:
        """
        Run replicates and fold each chunk into its own partial accumulator.

        Args:
            fn: Replicate body
            reps: Number of replicates
            key: Stream key of the experiment
            initial: Factory for an empty accumulator
            fold: Adds one replicate result to an accumulator and returns it

        Returns:
            one partial per chunk, in replicate order; merging is left to the caller
        """
        if reps < 0:
            raise ValueError("reps must be non-negative")

        def run_chunk(start: int) -> A:
            stop = min(start + _CHUNK, reps)
            acc = initial()
            for r in range(start, stop):
                acc = fold(acc, fn(replicate_stream(key, r)))
            with self._lock:
                self.completed += stop - start
            return acc

        return self._dispatch(run_chunk, reps)

    def _dispatch(self, run_chunk: Callable[[int], Any], reps: int) -> List[Any]:
        starts = list(range(0, reps, _CHUNK))
        self.submitted += reps
        logger.debug("Running replicates", reps=reps, threads=self.threads, chunks=len(starts))
        if self.threads == 1 or len(starts) <= 1:
            return [run_chunk(s) for s in starts]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(run_chunk, starts))

    def run_from(self, fn: Callable[[np.random.Generator], T], reps: int, rng: np.random.Generator) -> List[T]:
        """Run replicates under a key drawn from `rng`."""
        return self.run(fn, reps, derive_key(rng))

    def status(self) -> Dict[str, Any]:
        """
        Get runner status.

        Returns:
            dict with thread count and replicate counters
        """
        return {
            "threads": self.threads,
            "submitted": self.submitted,
            "completed": self.completed,
        }
