"""
Poisson block tests.

Edge counts between k disjoint blocks of half-edges (CM, bipartite CM) or of
vertices (PA) are tallied over replicates and compared with the independent
Poisson product of the limiting rates. Pairs (i, j) are ordered i <= j and a
pair of endpoints in the same block counts towards (i, i).
"""
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidParameterError
from ..generators.configuration import match_half_edges
from ..generators.preferential import preferential_attachment
from ..generators.sequences import BipartiteDegrees, SequenceLike, as_degree_sequence, as_weight_sequence
from ..graphex.poisson import poisson_pmf
from ..log import get_component_logger
from ..services.runner import ReplicateRunner
from .tv import tv_against_pmf

logger = get_component_logger("graphex_sim.analysis.blocks")

Pair = Tuple[int, int]


class BlockSpec:
    """Pairwise disjoint index sets S_1..S_k."""

    def __init__(self, blocks: Sequence[Sequence[int]]):
        self.blocks: List[np.ndarray] = [np.unique(np.asarray(b, dtype=np.int64)) for b in blocks]
        if not self.blocks:
            raise InvalidParameterError("at least one block is required")
        seen = np.concatenate(self.blocks) if self.blocks else np.empty(0, dtype=np.int64)
        if np.unique(seen).size != seen.size:
            raise InvalidParameterError("blocks must be pairwise disjoint")
        if seen.size and seen.min() < 0:
            raise InvalidParameterError("block indices must be non-negative")

    @classmethod
    def contiguous(cls, sizes: Sequence[int], start: int = 0) -> "BlockSpec":
        """Blocks of consecutive indices with the given sizes."""
        blocks, cursor = [], start
        for size in sizes:
            blocks.append(np.arange(cursor, cursor + int(size)))
            cursor += int(size)
        return cls(blocks)

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> List[int]:
        return [int(b.size) for b in self.blocks]

    def pairs(self) -> List[Pair]:
        return [(i, j) for i in range(self.k) for j in range(i, self.k)]

    def labels(self, length: int) -> np.ndarray:
        """Block label per index (-1 outside all blocks)."""
        out = np.full(length, -1, dtype=np.int64)
        for i, block in enumerate(self.blocks):
            if block.size and block.max() >= length:
                raise InvalidParameterError(f"block {i} has an index beyond {length - 1}")
            out[block] = i
        return out


@dataclass
class BlockCountResult:
    """Empirical joint law of block edge counts and its Poisson reference."""

    pairs: List[Pair]
    rates: Dict[Pair, float]
    joint: Dict[Tuple[int, ...], int]
    means: Dict[Pair, float]
    reps: int
    tv: float
    warnings: List[str] = field(default_factory=list)

    def reference_pmf(self, outcome: Tuple[int, ...]) -> float:
        return float(np.prod([poisson_pmf(k, self.rates[p]) for k, p in zip(outcome, self.pairs)]))

    def mean_stderr(self, pair: Pair) -> float:
        """Standard error of the empirical mean under the Poisson reference."""
        return math.sqrt(self.rates[pair] / self.reps) if self.reps else math.inf

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pairs": [list(p) for p in self.pairs],
            "rates": {f"{i},{j}": r for (i, j), r in self.rates.items()},
            "means": {f"{i},{j}": m for (i, j), m in self.means.items()},
            "reps": self.reps,
            "tv": self.tv,
            "warnings": list(self.warnings),
        }


def _pair_index(k: int) -> np.ndarray:
    index = np.full((k, k), -1, dtype=np.int64)
    for n, (i, j) in enumerate((i, j) for i in range(k) for j in range(i, k)):
        index[i, j] = index[j, i] = n
    return index


def _tally(la: np.ndarray, lb: np.ndarray, weights: Optional[np.ndarray], index: np.ndarray, n_pairs: int) -> Tuple[int, ...]:
    hit = (la >= 0) & (lb >= 0)
    w = None if weights is None else weights[hit]
    counts = np.bincount(index[la[hit], lb[hit]], weights=w, minlength=n_pairs)
    return tuple(int(c) for c in counts)


def _summarize(blocks: BlockSpec, rates: Dict[Pair, float], outcomes: List[Tuple[int, ...]], warnings: List[str]) -> BlockCountResult:
    pairs = blocks.pairs()
    joint: Dict[Tuple[int, ...], int] = {}
    for outcome in outcomes:
        joint[outcome] = joint.get(outcome, 0) + 1
    reps = len(outcomes)
    arr = np.asarray(outcomes, dtype=np.float64).reshape(reps, len(pairs)) if reps else np.zeros((0, len(pairs)))
    means = {p: float(arr[:, n].mean()) if reps else math.nan for n, p in enumerate(pairs)}
    result = BlockCountResult(pairs, rates, joint, means, reps, 0.0, warnings)
    result.tv = tv_against_pmf(joint, result.reference_pmf) if reps else math.nan
    for message in warnings:
        logger.warning("Block test regime", detail=message)
    return result


def _size_warnings(sizes: Sequence[float], scale: float, what: str) -> List[str]:
    return [f"block {i} {what} {s:g} is large compared to {scale:g}" for i, s in enumerate(sizes) if s > 5.0 * scale]


def cm_block_edge_counts(
    d: SequenceLike,
    blocks: BlockSpec,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
) -> BlockCountResult:
    """
    Edge counts between half-edge blocks of CM_n(d).

    Reference: Poisson(s_i s_j / l_n) for i != j and Poisson(s_i^2 / (2 l_n)) on the diagonal.
    """
    seq = as_degree_sequence(d)
    ell = seq.ell
    labels = blocks.labels(ell)
    index = _pair_index(blocks.k)
    n_pairs = len(blocks.pairs())
    sizes = blocks.sizes
    rates = {
        (i, j): (sizes[i] * sizes[j] / ell if i != j else sizes[i] ** 2 / (2.0 * ell)) for i, j in blocks.pairs()
    }

    def one(rep_rng: np.random.Generator) -> Tuple[int, ...]:
        a, b = match_half_edges(ell, rep_rng)
        return _tally(labels[a], labels[b], None, index, n_pairs)

    runner = runner or ReplicateRunner()
    outcomes = runner.run_from(one, reps, rng)
    return _summarize(blocks, rates, outcomes, _size_warnings(sizes, math.sqrt(ell), "size"))


def pa_block_edge_counts(
    delta: SequenceLike,
    m: int,
    blocks: BlockSpec,
    reps: int,
    rng: np.random.Generator,
    simultaneous: bool = True,
    runner: Optional[ReplicateRunner] = None,
) -> BlockCountResult:
    """
    Edge counts between vertex blocks of PA_n(delta, m), loops included on the diagonal.

    Reference: Poisson(2m S_i S_j / l_delta^2) for i != j and Poisson(m S_i^2 / l_delta^2),
    with S_i the delta mass of block i.
    """
    seq = as_weight_sequence(delta)
    labels = blocks.labels(seq.n)
    index = _pair_index(blocks.k)
    n_pairs = len(blocks.pairs())
    ell = seq.total
    mass = [float(seq.weights[b].sum()) for b in blocks.blocks]
    rates = {
        (i, j): (2.0 * m * mass[i] * mass[j] / ell**2 if i != j else m * mass[i] ** 2 / ell**2)
        for i, j in blocks.pairs()
    }

    def one(rep_rng: np.random.Generator) -> Tuple[int, ...]:
        graph = preferential_attachment(seq, m, rep_rng, simultaneous)
        return _tally(labels[graph.u], labels[graph.v], graph.mult, index, n_pairs)

    runner = runner or ReplicateRunner()
    outcomes = runner.run_from(one, reps, rng)
    warnings = _size_warnings(mass, ell / math.sqrt(2.0 * m), "delta mass")
    warnings += [f"block {i} holds more than half of l_delta" for i, s in enumerate(mass) if s > ell / 2.0]
    return _summarize(blocks, rates, outcomes, warnings)


def bcm_block_edge_counts(
    d: BipartiteDegrees,
    blocks: BlockSpec,
    reps: int,
    rng: np.random.Generator,
    runner: Optional[ReplicateRunner] = None,
) -> BlockCountResult:
    """
    Edge counts between half-edge blocks of the bipartite CM.

    Half-edges 0..l/2-1 belong to side 1 (in vertex order) and l/2..l-1 to side 2.
    Reference: Poisson(2 (|S_i1||S_j2| + |S_i2||S_j1|) / l) for i != j and
    Poisson(2 |S_i1||S_i2| / l) on the diagonal.
    """
    if not isinstance(d, BipartiteDegrees):
        d = BipartiteDegrees(*d)
    ell = d.ell
    half = ell // 2
    labels = blocks.labels(ell)
    index = _pair_index(blocks.k)
    n_pairs = len(blocks.pairs())
    side1 = [int((b < half).sum()) for b in blocks.blocks]
    side2 = [int((b >= half).sum()) for b in blocks.blocks]
    rates = {
        (i, j): (
            2.0 * (side1[i] * side2[j] + side2[i] * side1[j]) / ell if i != j else 2.0 * side1[i] * side2[i] / ell
        )
        for i, j in blocks.pairs()
    }
    left = np.arange(half)

    def one(rep_rng: np.random.Generator) -> Tuple[int, ...]:
        right = half + rep_rng.permutation(half)
        return _tally(labels[left], labels[right], None, index, n_pairs)

    runner = runner or ReplicateRunner()
    outcomes = runner.run_from(one, reps, rng)
    return _summarize(blocks, rates, outcomes, _size_warnings(blocks.sizes, math.sqrt(ell), "size"))
