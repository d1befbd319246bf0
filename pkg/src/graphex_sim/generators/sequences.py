"""
Degree and weight sequences, synthetic families and sequence files.
"""
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, List, Mapping, Union

import numpy as np

from ..exceptions import ConfigError, InvalidParameterError, OddHalfEdgeSum, UnbalancedSides

SequenceLike = Union["DegreeSequence", "WeightSequence", Iterable[float], np.ndarray]


def _int_array(values: Iterable[float], what: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64).ravel()
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidParameterError(f"{what} must be finite")
    rounded = np.rint(arr)
    if not np.array_equal(rounded, arr):
        raise InvalidParameterError(f"{what} must be integers")
    return rounded.astype(np.int64)


@dataclass(frozen=True, eq=False)
class DegreeSequence:
    """Positive integer degrees with an even sum."""

    degrees: np.ndarray

    def __post_init__(self):
        d = _int_array(self.degrees, "degrees")
        if d.size == 0:
            raise InvalidParameterError("degree sequence is empty")
        if d.min() < 1:
            raise InvalidParameterError("degrees must be >= 1")
        if int(d.sum()) % 2:
            raise OddHalfEdgeSum(f"sum of degrees {int(d.sum())} is odd")
        d.setflags(write=False)
        object.__setattr__(self, "degrees", d)

    @property
    def n(self) -> int:
        return int(self.degrees.size)

    @property
    def ell(self) -> int:
        """l_n, the total number of half-edges."""
        return int(self.degrees.sum())

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max())

    def sum_of_squares(self) -> float:
        return float(np.sum(self.degrees.astype(np.float64) ** 2))

    def stubs(self) -> np.ndarray:
        """Half-edge owner array: vertex i repeated d_i times."""
        return np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)


@dataclass(frozen=True, eq=False)
class WeightSequence:
    """Non-negative real weights with a positive total (PA delta or GRG w)."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64).ravel()
        if w.size == 0:
            raise InvalidParameterError("weight sequence is empty")
        if not np.all(np.isfinite(w)) or w.min() < 0:
            raise InvalidParameterError("weights must be finite and non-negative")
        if w.sum() <= 0:
            raise InvalidParameterError("weights must have a positive total")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def n(self) -> int:
        return int(self.weights.size)

    @property
    def total(self) -> float:
        return float(self.weights.sum())

    def require_positive(self) -> "WeightSequence":
        if self.weights.min() <= 0:
            raise InvalidParameterError("GRG weights must be strictly positive")
        return self


@dataclass(frozen=True, eq=False)
class BipartiteDegrees:
    """Degrees of the two sides of a bipartite configuration model."""

    side1: np.ndarray
    side2: np.ndarray

    def __post_init__(self):
        s1 = _int_array(self.side1, "side1 degrees")
        s2 = _int_array(self.side2, "side2 degrees")
        if s1.size == 0 or s2.size == 0:
            raise InvalidParameterError("both sides need at least one vertex")
        if min(s1.min(), s2.min()) < 1:
            raise InvalidParameterError("degrees must be >= 1")
        if int(s1.sum()) != int(s2.sum()):
            raise UnbalancedSides(f"side totals differ: {int(s1.sum())} vs {int(s2.sum())}")
        s1.setflags(write=False)
        s2.setflags(write=False)
        object.__setattr__(self, "side1", s1)
        object.__setattr__(self, "side2", s2)

    @property
    def n1(self) -> int:
        return int(self.side1.size)

    @property
    def n2(self) -> int:
        return int(self.side2.size)

    @property
    def ell(self) -> int:
        """Total half-edges over both sides (twice the edge count)."""
        return int(self.side1.sum() + self.side2.sum())

    def all_degrees(self) -> np.ndarray:
        return np.concatenate([self.side1, self.side2])

    def sides(self) -> np.ndarray:
        return np.concatenate([np.zeros(self.n1, dtype=np.int8), np.ones(self.n2, dtype=np.int8)])


def as_degree_sequence(d: SequenceLike) -> DegreeSequence:
    return d if isinstance(d, DegreeSequence) else DegreeSequence(np.asarray(d))


def as_weight_sequence(w: SequenceLike) -> WeightSequence:
    if isinstance(w, WeightSequence):
        return w
    if isinstance(w, DegreeSequence):
        return WeightSequence(w.degrees)
    return WeightSequence(np.asarray(w))


# ----------------------------------------------------------------------
# Synthetic families
# ----------------------------------------------------------------------


def expand_family(spec: Union[Mapping[str, Any], List[Any]]) -> np.ndarray:
    """
    Expand a block family into a value array.

    Accepted forms:
        {"blocks": [{"count": 50, "degree": 100}, {"count": 5000, "degree": 1}]}
        {"hubs": {"count": 50, "degree": 100}, "leaves": {"count": 5000, "degree": 1}}
        [{"count": ..., "degree": ...}, ...]

    "value" and "weight" are accepted as synonyms of "degree". Blocks keep
    their listed order.
    """
    if isinstance(spec, Mapping) and "blocks" in spec:
        blocks = list(spec["blocks"])
    elif isinstance(spec, Mapping):
        blocks = list(spec.values())
    else:
        blocks = list(spec)
    parts = []
    for block in blocks:
        if not isinstance(block, Mapping) or "count" not in block:
            raise ConfigError(f"family block needs a count: {block!r}")
        value = block.get("degree", block.get("value", block.get("weight")))
        if value is None:
            raise ConfigError(f"family block needs a degree/value: {block!r}")
        count = int(block["count"])
        if count < 0:
            raise ConfigError("family block count must be non-negative")
        parts.append(np.full(count, float(value)))
    if not parts:
        raise ConfigError("family has no blocks")
    return np.concatenate(parts)


def read_sequence(path: Union[str, Path]) -> np.ndarray:
    """
    Read a sequence file: JSON array, JSON family object, or one value per line.

    Raises:
        ConfigError: missing or unparseable file
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"sequence file not found: {path}")
    text = path.read_text(encoding="utf-8").strip()
    if not text:
        raise ConfigError(f"sequence file is empty: {path}")
    if text[0] in "[{":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
        if isinstance(data, Mapping):
            return expand_family(data)
        return np.asarray(data, dtype=np.float64)
    try:
        values = [float(line) for line in text.splitlines() if line.strip() and not line.startswith("#")]
    except ValueError as exc:
        raise ConfigError(f"non-numeric line in {path}: {exc}") from exc
    return np.asarray(values, dtype=np.float64)


def write_sequence(path: Union[str, Path], values: Iterable[float]) -> None:
    """Write one value per line (integers without a decimal point)."""
    lines = []
    for value in np.asarray(list(values), dtype=np.float64):
        lines.append(str(int(value)) if float(value).is_integer() else repr(float(value)))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
