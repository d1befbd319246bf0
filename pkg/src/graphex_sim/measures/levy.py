"""
Pure-jump non-decreasing paths Y(t) = drift * t + sum_{theta_i <= t} w_i.
"""
import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..exceptions import InvalidParameterError
from .crm import CRMSample


@dataclass(frozen=True, eq=False)
class LevyPath:
    """Jump times (sorted) and sizes on [0, horizon]."""

    times: np.ndarray
    jumps: np.ndarray
    horizon: float
    drift: float = 0.0

    def __post_init__(self):
        times = np.asarray(self.times, dtype=np.float64).ravel()
        jumps = np.asarray(self.jumps, dtype=np.float64).ravel()
        if times.shape != jumps.shape:
            raise InvalidParameterError("times and jumps differ in length")
        order = np.argsort(times, kind="stable")
        object.__setattr__(self, "times", times[order])
        object.__setattr__(self, "jumps", jumps[order])
        object.__setattr__(self, "_cumulative", np.concatenate([[0.0], np.cumsum(jumps[order])]))

    def evaluate(self, t):
        """Y(t), right-continuous; accepts scalars or arrays."""
        t_arr = np.asarray(t, dtype=np.float64)
        idx = np.searchsorted(self.times, t_arr, side="right")
        out = self.drift * t_arr + self._cumulative[idx]
        return float(out) if out.ndim == 0 else out

    def __call__(self, t):
        return self.evaluate(t)

    def step_samples(self, grid: Optional[Iterable[float]] = None, points: int = 200) -> np.ndarray:
        """(t, Y(t)) rows on a grid (default: uniform grid plus every jump time)."""
        if grid is None:
            grid = np.union1d(np.linspace(0.0, self.horizon, points), self.times)
        grid = np.asarray(list(grid) if not isinstance(grid, np.ndarray) else grid, dtype=np.float64)
        return np.column_stack([grid, self.evaluate(grid)])

    def to_csv(self, grid: Optional[Iterable[float]] = None) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["t", "y"])
        for t, y in self.step_samples(grid):
            writer.writerow([repr(float(t)), repr(float(y))])
        return buffer.getvalue()


def levy_path_from_sequence(d, rng: np.random.Generator) -> LevyPath:
    """
    Y_n(t) = (1/sqrt(l_n)) sum_i d_i 1{U_i <= t}, U_i uniform on [0, sqrt(l_n)].
    """
    from ..generators.sequences import as_degree_sequence

    seq = as_degree_sequence(d)
    root = math.sqrt(seq.ell)
    times = rng.random(seq.n) * root
    return LevyPath(times, seq.degrees / root, root)


def levy_path_from_weights(delta, m: int, rng: np.random.Generator) -> LevyPath:
    """
    Y_{n,delta}(t) = (sqrt(2m) / l_delta) sum_i delta_i 1{U_i <= t}, U_i uniform on [0, sqrt(2m)].
    """
    from ..generators.sequences import as_weight_sequence

    seq = as_weight_sequence(delta)
    if m < 1:
        raise InvalidParameterError("m must be >= 1")
    root = math.sqrt(2.0 * m)
    positive = seq.weights > 0
    times = rng.random(seq.n) * root
    return LevyPath(times[positive], root * seq.weights[positive] / seq.total, root)


def levy_path_from_crm(sample: CRMSample) -> LevyPath:
    return LevyPath(sample.theta, sample.weights, sample.horizon, sample.drift)
