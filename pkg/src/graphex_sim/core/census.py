"""
Census: empirical distribution over isomorphism classes of small multigraphs.

Graphs too large to canonicalize are counted under the reserved OVERSIZE key so
that frequencies still sum to one.
"""
import csv
import io
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional

from .canonical import OVERSIZE_KEY, CanonicalKey, canonical_key
from .multigraph import Multigraph
from ..exceptions import TooLargeForCanonicalization


def classify(graph: Multigraph, key_vertex_limit: Optional[int] = None) -> CanonicalKey:
    """Canonical key, or OVERSIZE_KEY above the vertex limit."""
    try:
        return canonical_key(graph, key_vertex_limit)
    except TooLargeForCanonicalization:
        return OVERSIZE_KEY


@dataclass
class Census:
    """Counts per canonical key plus one representative graph per class."""

    counts: Dict[CanonicalKey, int] = field(default_factory=dict)
    representatives: Dict[CanonicalKey, Multigraph] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, graph: Multigraph, key_vertex_limit: Optional[int] = None) -> CanonicalKey:
        """Count one graph; returns its key."""
        key = classify(graph, key_vertex_limit)
        self.record(key, graph)
        return key

    def record(self, key: CanonicalKey, graph: Optional[Multigraph] = None) -> None:
        """Count a graph whose key is already known."""
        self.counts[key] = self.counts.get(key, 0) + 1
        if graph is not None and key != OVERSIZE_KEY and key not in self.representatives:
            self.representatives[key] = graph

    def merge(self, other: "Census") -> "Census":
        """New census with summed counts."""
        counts = dict(self.counts)
        for key, count in other.counts.items():
            counts[key] = counts.get(key, 0) + count
        reps = dict(other.representatives)
        reps.update(self.representatives)
        return Census(counts, reps)

    def frequencies(self) -> Dict[CanonicalKey, float]:
        total = self.total
        if total == 0:
            return {}
        return {key: count / total for key, count in self.counts.items()}

    def frequency(self, key: CanonicalKey) -> float:
        total = self.total
        return self.counts.get(key, 0) / total if total else 0.0

    def keys_sorted(self) -> List[CanonicalKey]:
        """Keys by decreasing count, ties broken by key bytes."""
        return sorted(self.counts, key=lambda k: (-self.counts[k], k))

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: {hex key: {count, edges}} in deterministic order."""
        classes = {}
        for key in self.keys_sorted():
            rep = self.representatives.get(key)
            classes[key.hex()] = {
                "count": self.counts[key],
                "representative": rep.to_dict() if rep is not None else None,
            }
        return {"total": self.total, "classes": classes}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Census":
        counts: Dict[CanonicalKey, int] = {}
        reps: Dict[CanonicalKey, Multigraph] = {}
        for hex_key, entry in data.get("classes", {}).items():
            key = bytes.fromhex(hex_key)
            counts[key] = int(entry["count"])
            if entry.get("representative") is not None:
                reps[key] = Multigraph.from_dict(entry["representative"])
        return cls(counts, reps)

    def to_csv(self) -> str:
        """One row per class: key, count, frequency, vertices, edges, loops."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "count", "frequency", "vertices", "edges", "loops"])
        total = self.total
        for key in self.keys_sorted():
            rep = self.representatives.get(key)
            writer.writerow(
                [
                    key.hex(),
                    self.counts[key],
                    f"{self.counts[key] / total:.8f}",
                    rep.n_vertices if rep is not None else "",
                    rep.non_loop_edge_count() if rep is not None else "",
                    rep.loop_count() if rep is not None else "",
                ]
            )
        return buffer.getvalue()


def census_of(graphs: Iterable[Multigraph], key_vertex_limit: Optional[int] = None) -> Census:
    """
    Census of a sequence of graphs.

    Args:
        graphs: Graphs to count
        key_vertex_limit: Canonicalization ceiling (oversized graphs go to OVERSIZE)

    Returns:
        Census with total equal to the number of graphs
    """
    census = Census()
    for graph in graphs:
        census.add(graph, key_vertex_limit)
    return census
