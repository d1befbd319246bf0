"""
Finite symmetric adjacency measures on [0, s]^2.

A point (x, y, m) stands for m units of mass at both (x, y) and (y, x);
diagonal points (x, x, m) carry m once. Intervals are half-open [a, b).
"""
import csv
import io
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from ..core.multigraph import Multigraph
from ..exceptions import InvalidParameterError

Interval = Tuple[float, float]


class IntervalUnion:
    """Finite union of half-open intervals [a, b), merged and sorted."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Iterable[Interval]):
        cleaned = sorted((float(a), float(b)) for a, b in intervals if float(b) > float(a))
        merged: List[List[float]] = []
        for a, b in cleaned:
            if merged and a <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        self.intervals: Tuple[Interval, ...] = tuple((a, b) for a, b in merged)

    @classmethod
    def of(cls, spec: Union["IntervalUnion", Interval, Sequence[Interval]]) -> "IntervalUnion":
        if isinstance(spec, IntervalUnion):
            return spec
        if len(spec) == 2 and not isinstance(spec[0], (tuple, list)):
            return cls([tuple(spec)])
        return cls(spec)

    @property
    def length(self) -> float:
        return sum(b - a for a, b in self.intervals)

    def contains(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        hit = np.zeros(x.shape, dtype=bool)
        for a, b in self.intervals:
            hit |= (x >= a) & (x < b)
        return hit

    def __repr__(self) -> str:
        return "IntervalUnion(" + " u ".join(f"[{a:g},{b:g})" for a, b in self.intervals) + ")"


@dataclass(frozen=True, eq=False)
class AdjacencyMeasure:
    """Labeled points (x, y, mult) with all labels in the window [0, window]."""

    x: np.ndarray
    y: np.ndarray
    mult: np.ndarray
    window: float

    def __post_init__(self):
        x = np.asarray(self.x, dtype=np.float64).ravel()
        y = np.asarray(self.y, dtype=np.float64).ravel()
        m = np.asarray(self.mult, dtype=np.int64).ravel()
        if not (x.shape == y.shape == m.shape):
            raise InvalidParameterError("point arrays differ in length")
        if self.window < 0:
            raise InvalidParameterError("window must be non-negative")
        if x.size and (min(x.min(), y.min()) < 0 or max(x.max(), y.max()) > self.window):
            raise InvalidParameterError("point label outside the window")
        if m.size and m.min() < 1:
            raise InvalidParameterError("point multiplicities must be >= 1")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "mult", m)
        object.__setattr__(self, "window", float(self.window))

    @classmethod
    def empty(cls, window: float = 0.0) -> "AdjacencyMeasure":
        return cls(np.empty(0), np.empty(0), np.empty(0, dtype=np.int64), window)

    @classmethod
    def from_points(cls, points: Iterable[Tuple[float, float, int]], window: float) -> "AdjacencyMeasure":
        pts = list(points)
        if not pts:
            return cls.empty(window)
        x, y, m = zip(*pts)
        return cls(np.asarray(x), np.asarray(y), np.asarray(m), window)

    @property
    def n_points(self) -> int:
        return int(self.x.size)

    def total_mass(self) -> int:
        """xi([0,s)^2): off-diagonal points count twice."""
        diag = self.x == self.y
        return int(2 * self.mult[~diag].sum() + self.mult[diag].sum())

    def restrict(self, t: float) -> "AdjacencyMeasure":
        """Points inside [0, t)^2 with window t."""
        keep = (self.x < t) & (self.y < t)
        return AdjacencyMeasure(self.x[keep], self.y[keep], self.mult[keep], t)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# window={self.window!r}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["x", "y", "mult"])
        for a, b, m in zip(self.x.tolist(), self.y.tolist(), self.mult.tolist()):
            writer.writerow([repr(a), repr(b), m])
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "AdjacencyMeasure":
        lines = text.splitlines()
        if not lines or not lines[0].startswith("# window="):
            raise InvalidParameterError("adjacency CSV needs a '# window=' header line")
        window = float(lines[0].split("=", 1)[1])
        reader = csv.DictReader(lines[1:])
        return cls.from_points(((float(r["x"]), float(r["y"]), int(r["mult"])) for r in reader), window)


def count(xi: AdjacencyMeasure, A, B) -> int:
    """
    xi(A x B) with multiplicity, reading each stored point symmetrically.

    Args:
        xi: Adjacency measure
        A: IntervalUnion or (a, b) pair or list of pairs
        B: IntervalUnion or (a, b) pair or list of pairs

    Returns:
        Total multiplicity
    """
    A = IntervalUnion.of(A)
    B = IntervalUnion.of(B)
    if xi.n_points == 0:
        return 0
    xa, xb = A.contains(xi.x), B.contains(xi.x)
    ya, yb = A.contains(xi.y), B.contains(xi.y)
    diag = xi.x == xi.y
    off = ~diag
    total = xi.mult[off & xa & yb].sum() + xi.mult[off & ya & xb].sum()
    total += xi.mult[diag & xa & xb].sum()
    return int(total)


def extract_graph(xi: AdjacencyMeasure, t: float) -> Multigraph:
    """
    Unlabeled multigraph of xi restricted to [0, t)^2.

    Points sharing a coordinate value share a vertex.
    """
    if t > xi.window + 1e-12 * max(1.0, xi.window):
        raise InvalidParameterError(f"t={t} exceeds the window {xi.window}")
    part = xi.restrict(t)
    if part.n_points == 0:
        return Multigraph.empty(0)
    labels, inverse = np.unique(np.concatenate([part.x, part.y]), return_inverse=True)
    k = part.n_points
    return Multigraph(labels.size, inverse[:k], inverse[k:], part.mult)
