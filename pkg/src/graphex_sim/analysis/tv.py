"""
Total variation distance between censuses and against reference pmfs.
"""
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, Mapping, Optional, Union

import numpy as np

from ..core.census import Census
from ..exceptions import InvalidParameterError


@dataclass(frozen=True)
class TVEstimate:
    """
    Plug-in TV with a bootstrap 95% half-width.

    Attributes:
        value: 1/2 sum over observed classes of |f1 - f2|
        n1, n2: sample sizes
        half_width: half the 2.5%-97.5% spread of bootstrap TVs
    """

    value: float
    n1: int
    n2: int
    half_width: float

    @property
    def ci(self):
        return (max(0.0, self.value - self.half_width), min(1.0, self.value + self.half_width))

    def to_dict(self) -> Dict[str, Any]:
        return {"value": self.value, "n1": self.n1, "n2": self.n2, "half_width": self.half_width, "ci": list(self.ci)}


def _aligned(c1: Census, c2: Census):
    keys = sorted(set(c1.counts) | set(c2.counts))
    a = np.array([c1.counts.get(k, 0) for k in keys], dtype=np.float64)
    b = np.array([c2.counts.get(k, 0) for k in keys], dtype=np.float64)
    return a, b


def tv_between(
    c1: Census,
    c2: Census,
    rng: Optional[np.random.Generator] = None,
    resamples: Optional[int] = None,
) -> TVEstimate:
    """
    TV between two censuses with a multinomial bootstrap interval.

    Args:
        c1: First census (total >= 1)
        c2: Second census (total >= 1)
        rng: Generator for the bootstrap; a fixed seed is used when omitted
        resamples: Bootstrap resamples (settings.bootstrap_resamples)

    Returns:
        TVEstimate
    """
    if c1.total < 1 or c2.total < 1:
        raise InvalidParameterError("both censuses need at least one observation")
    if resamples is None:
        from ..config import settings

        resamples = settings.bootstrap_resamples
    if rng is None:
        rng = np.random.default_rng(0)
    a, b = _aligned(c1, c2)
    n1, n2 = int(a.sum()), int(b.sum())
    f1, f2 = a / n1, b / n2
    value = 0.5 * float(np.abs(f1 - f2).sum())
    if resamples < 1:
        return TVEstimate(value, n1, n2, math.nan)
    boot1 = rng.multinomial(n1, f1, size=resamples) / n1
    boot2 = rng.multinomial(n2, f2, size=resamples) / n2
    tvs = 0.5 * np.abs(boot1 - boot2).sum(axis=1)
    lo, hi = np.percentile(tvs, [2.5, 97.5])
    return TVEstimate(value, n1, n2, float(hi - lo) / 2.0)


def tv_against_pmf(
    counts: Mapping[Hashable, int],
    pmf: Union[Mapping[Hashable, float], Callable[[Hashable], float]],
) -> float:
    """
    Exact TV between an empirical distribution and a reference pmf.

    Reference mass outside the observed outcomes is counted in full:
    1/2 [sum over observed |f - p| + (1 - sum over observed p)].
    """
    total = sum(counts.values())
    if total < 1:
        raise InvalidParameterError("empirical distribution is empty")
    lookup = pmf.get if isinstance(pmf, Mapping) else pmf
    observed_ref = 0.0
    diff = 0.0
    for outcome, count in counts.items():
        p = float(lookup(outcome) or 0.0)
        observed_ref += p
        diff += abs(count / total - p)
    unobserved = max(0.0, 1.0 - observed_ref)
    return 0.5 * (diff + unobserved)
