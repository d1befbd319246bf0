"""
Small statistical summaries shared by the experiments.
"""
import math
from dataclasses import dataclass
from typing import Any, Dict, Iterable

import numpy as np


@dataclass(frozen=True)
class MeanEstimate:
    """Sample mean with standard error and a normal 95% half-width."""

    mean: float
    std: float
    n: int

    @property
    def stderr(self) -> float:
        return self.std / math.sqrt(self.n) if self.n > 0 else math.inf

    @property
    def half_width(self) -> float:
        return 1.96 * self.stderr

    def within(self, target: float, sigmas: float = 3.0, slack: float = 0.0) -> bool:
        """|mean - target| <= sigmas * stderr + slack."""
        return abs(self.mean - target) <= sigmas * self.stderr + slack

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mean": self.mean,
            "std": self.std,
            "n": self.n,
            "stderr": self.stderr,
            "ci95": [self.mean - self.half_width, self.mean + self.half_width],
        }


def mean_estimate(values: Iterable[float]) -> MeanEstimate:
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values, dtype=np.float64)
    if arr.size == 0:
        return MeanEstimate(math.nan, math.nan, 0)
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return MeanEstimate(float(arr.mean()), std, int(arr.size))


@dataclass(frozen=True)
class CharFunctionEstimate:
    """Empirical E[exp(i theta X)] with the Monte Carlo standard error of its modulus error."""

    theta: float
    value: complex
    stderr: float
    n: int

    def distance(self, exact: complex) -> float:
        return abs(self.value - exact)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theta": self.theta,
            "re": self.value.real,
            "im": self.value.imag,
            "stderr": self.stderr,
            "n": self.n,
        }


def empirical_char_function(samples: Iterable[float], theta: float) -> CharFunctionEstimate:
    """
    Mean of exp(i theta X) over samples.

    The standard error combines the real and imaginary parts:
    sqrt((var cos + var sin) / n).
    """
    x = np.asarray(list(samples) if not isinstance(samples, np.ndarray) else samples, dtype=np.float64)
    n = int(x.size)
    if n == 0:
        return CharFunctionEstimate(theta, complex(math.nan, math.nan), math.inf, 0)
    c, s = np.cos(theta * x), np.sin(theta * x)
    var = float(c.var() + s.var())
    return CharFunctionEstimate(theta, complex(c.mean(), s.mean()), math.sqrt(var / n), n)
