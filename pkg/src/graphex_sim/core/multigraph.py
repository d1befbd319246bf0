"""
Loop-aware finite multigraph.

Edges are stored once per unordered vertex pair {u, v} (u <= v) as three
parallel numpy arrays sorted by (u, v). Multiplicity-0 pairs are never stored.
A loop {v, v} of multiplicity m adds 2m to the degree of v.
"""
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np

EdgeMap = Dict[Tuple[int, int], int]


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class Multigraph:
    """
    Immutable multigraph on vertices 0..n_vertices-1.

    Attributes:
        n_vertices: number of vertices (isolated ones included)
        u, v: endpoint arrays with u <= v
        mult: multiplicity array (all >= 1)
        sides: optional per-vertex side label (0 or 1) for bipartite graphs
    """

    __slots__ = ("n_vertices", "u", "v", "mult", "sides")

    def __init__(
        self,
        n_vertices: int,
        u: Iterable[int] = (),
        v: Iterable[int] = (),
        mult: Optional[Iterable[int]] = None,
        sides: Optional[Iterable[int]] = None,
    ):
        n_vertices = int(n_vertices)
        if n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        u_arr = np.asarray(u, dtype=np.int64).ravel()
        v_arr = np.asarray(v, dtype=np.int64).ravel()
        if u_arr.shape != v_arr.shape:
            raise ValueError("endpoint arrays differ in length")
        m_arr = (
            np.ones(u_arr.shape, dtype=np.int64)
            if mult is None
            else np.asarray(mult, dtype=np.int64).ravel()
        )
        if m_arr.shape != u_arr.shape:
            raise ValueError("multiplicity array differs in length")
        if u_arr.size and (min(u_arr.min(), v_arr.min()) < 0 or max(u_arr.max(), v_arr.max()) >= n_vertices):
            raise ValueError("vertex index out of range")
        if m_arr.size and m_arr.min() < 0:
            raise ValueError("negative multiplicity")

        lo = np.minimum(u_arr, v_arr)
        hi = np.maximum(u_arr, v_arr)
        if lo.size:
            keys = lo * max(n_vertices, 1) + hi
            uniq, inverse = np.unique(keys, return_inverse=True)
            agg = np.bincount(inverse, weights=m_arr, minlength=uniq.size).astype(np.int64)
            present = agg > 0
            uniq, agg = uniq[present], agg[present]
            lo, hi = np.divmod(uniq, max(n_vertices, 1))
            m_arr = agg
        else:
            m_arr = m_arr[:0]

        self.n_vertices = n_vertices
        self.u = _frozen(lo.astype(np.int64))
        self.v = _frozen(hi.astype(np.int64))
        self.mult = _frozen(m_arr.astype(np.int64))
        if sides is not None:
            side_arr = np.asarray(sides, dtype=np.int8).ravel()
            if side_arr.size != n_vertices:
                raise ValueError("sides must have one entry per vertex")
            self.sides = _frozen(side_arr)
        else:
            self.sides = None

    # ------------------------------------------------------------------
    # Construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, n_vertices: int = 0) -> "Multigraph":
        """Graph with no edges."""
        return cls(n_vertices)

    @classmethod
    def from_pairs(
        cls, n_vertices: int, a: np.ndarray, b: np.ndarray, sides: Optional[np.ndarray] = None
    ) -> "Multigraph":
        """Build from endpoint pairs, one edge per pair; repeated pairs add up."""
        return cls(n_vertices, a, b, None, sides)

    @classmethod
    def from_edges(
        cls,
        n_vertices: int,
        edges: Union[Mapping[Tuple[int, int], int], Iterable[Tuple[int, int, int]]],
        sides: Optional[Iterable[int]] = None,
    ) -> "Multigraph":
        """
        Build from an edge map {(u, v): mult} or an iterable of (u, v, mult).

        Args:
            n_vertices: Vertex count
            edges: Pair multiplicities
            sides: Optional bipartition

        Returns:
            Multigraph
        """
        if isinstance(edges, Mapping):
            triples = [(int(a), int(b), int(m)) for (a, b), m in edges.items()]
        else:
            triples = [(int(a), int(b), int(m)) for a, b, m in edges]
        if not triples:
            return cls(n_vertices, sides=sides)
        a, b, m = zip(*triples)
        return cls(n_vertices, a, b, m, sides)

    # ------------------------------------------------------------------
    # Basic quantities
    # ------------------------------------------------------------------

    @property
    def edges(self) -> EdgeMap:
        """Edge map {(u, v): mult} with u <= v."""
        return {
            (int(a), int(b)): int(m) for a, b, m in zip(self.u.tolist(), self.v.tolist(), self.mult.tolist())
        }

    @property
    def n_pairs(self) -> int:
        """Number of stored (distinct) vertex pairs."""
        return int(self.mult.size)

    @property
    def is_bipartite_labeled(self) -> bool:
        return self.sides is not None

    def multiplicity(self, a: int, b: int) -> int:
        """Multiplicity of the pair {a, b} (0 when absent)."""
        lo, hi = (a, b) if a <= b else (b, a)
        hit = np.flatnonzero((self.u == lo) & (self.v == hi))
        return int(self.mult[hit[0]]) if hit.size else 0

    def loop_mask(self) -> np.ndarray:
        return self.u == self.v

    def degrees(self) -> np.ndarray:
        """Degree vector, loops counted twice."""
        deg = np.bincount(self.u, weights=self.mult, minlength=self.n_vertices)
        deg += np.bincount(self.v, weights=self.mult, minlength=self.n_vertices)
        return deg.astype(np.int64)

    def non_loop_edge_count(self) -> int:
        """e(G): number of non-loop edges counted with multiplicity."""
        return int(self.mult[~self.loop_mask()].sum())

    def loop_count(self) -> int:
        """Number of loops counted with multiplicity."""
        return int(self.mult[self.loop_mask()].sum())

    def total_half_edges(self) -> int:
        """Sum of degrees: 2 e(G) + 2 (loop multiplicity sum)."""
        return 2 * int(self.mult.sum())

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------

    def induced(self, keep: np.ndarray) -> "Multigraph":
        """
        Induced multigraph on the vertices with keep[v] True.

        Survivors are relabeled 0..k-1 in their original order.
        """
        keep = np.asarray(keep, dtype=bool)
        if keep.size != self.n_vertices:
            raise ValueError("keep mask must have one entry per vertex")
        new_index = np.cumsum(keep) - 1
        edge_keep = keep[self.u] & keep[self.v]
        sides = self.sides[keep] if self.sides is not None else None
        return Multigraph(
            int(keep.sum()),
            new_index[self.u[edge_keep]],
            new_index[self.v[edge_keep]],
            self.mult[edge_keep],
            sides,
        )

    def drop_isolated(self) -> "Multigraph":
        """Remove degree-0 vertices, preserving the order of the survivors."""
        keep = np.zeros(self.n_vertices, dtype=bool)
        keep[self.u] = True
        keep[self.v] = True
        if keep.all():
            return self
        return self.induced(keep)

    def with_unit_multiplicities(self) -> "Multigraph":
        """Same support with every multiplicity set to 1."""
        return Multigraph(self.n_vertices, self.u, self.v, None, self.sides)

    def relabel(self, permutation: np.ndarray) -> "Multigraph":
        """Graph with vertex x renamed to permutation[x]."""
        perm = np.asarray(permutation, dtype=np.int64)
        if perm.size != self.n_vertices or np.unique(perm).size != perm.size:
            raise ValueError("relabel needs a permutation of the vertex set")
        sides = None
        if self.sides is not None:
            sides = np.empty_like(self.sides)
            sides[perm] = self.sides
        return Multigraph(self.n_vertices, perm[self.u], perm[self.v], self.mult, sides)

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form {n, edges: [[u, v, mult], ...]} (plus sides when bipartite)."""
        out: Dict[str, Any] = {
            "n": self.n_vertices,
            "edges": [[a, b, m] for a, b, m in zip(self.u.tolist(), self.v.tolist(), self.mult.tolist())],
        }
        if self.sides is not None:
            out["sides"] = self.sides.tolist()
        return out

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Multigraph":
        """Inverse of to_dict."""
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data.get("edges", [])], data.get("sides"))

    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.n_vertices == other.n_vertices
            and np.array_equal(self.u, other.u)
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.mult, other.mult)
        )

    def __hash__(self) -> int:
        return hash((self.n_vertices, self.u.tobytes(), self.v.tobytes(), self.mult.tobytes()))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n_vertices}, pairs={self.n_pairs}, e={self.non_loop_edge_count()}, loops={self.loop_count()})"


def non_loop_edge_count(graph: Multigraph) -> int:
    """e(G), the number of non-loop edges."""
    return graph.non_loop_edge_count()


def total_half_edges(graph: Multigraph) -> int:
    """Sum of all vertex degrees (loops count twice)."""
    return graph.total_half_edges()


def drop_isolated(graph: Multigraph) -> Multigraph:
    """Delete degree-0 vertices."""
    return graph.drop_isolated()
