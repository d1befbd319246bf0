"""
Canonical keys for small multigraphs.

The key of a graph is the sorted concatenation of the keys of its connected
components. A component key is the lexicographically smallest upper-triangular
adjacency encoding over all vertex orders that respect an isomorphism-invariant
colour refinement (loop multiplicity, degree, then iterated neighbour colours).
Vertices in a colour cell that are twins (identical rows outside their own pair)
are interchangeable, so only distinct arrangements of twin classes are tried.
"""
import itertools
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..exceptions import TooLargeForCanonicalization
from .multigraph import Multigraph

CanonicalKey = bytes

GRAPH_PREFIX = b"G"
OVERSIZE_KEY: CanonicalKey = b"OVERSIZE"


def _adjacency(graph: Multigraph) -> np.ndarray:
    n = graph.n_vertices
    adj = np.zeros((n, n), dtype=np.int64)
    adj[graph.u, graph.v] = graph.mult
    adj[graph.v, graph.u] = graph.mult
    return adj


def _refine(adj: np.ndarray) -> List[int]:
    """Stable colour refinement; returns a colour rank per vertex."""
    n = adj.shape[0]
    loops = np.diag(adj)
    degree = adj.sum(axis=1) + loops
    signatures: List[Tuple] = [(int(loops[i]), int(degree[i])) for i in range(n)]
    colours = _rank(signatures)
    while True:
        signatures = [
            (
                colours[i],
                tuple(sorted((colours[j], int(adj[i, j])) for j in range(n) if j != i and adj[i, j])),
            )
            for i in range(n)
        ]
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _rank(signatures: Sequence[Tuple]) -> List[int]:
    order = sorted(set(signatures))
    index = {sig: k for k, sig in enumerate(order)}
    return [index[sig] for sig in signatures]


def _twin_classes(adj: np.ndarray, cell: List[int]) -> List[List[int]]:
    """Partition a colour cell into classes of pairwise twins."""
    classes: List[List[int]] = []
    for vertex in cell:
        placed = False
        for group in classes:
            if all(_are_twins(adj, vertex, other) for other in group):
                group.append(vertex)
                placed = True
                break
        if not placed:
            classes.append([vertex])
    return classes


def _are_twins(adj: np.ndarray, a: int, b: int) -> bool:
    if adj[a, a] != adj[b, b]:
        return False
    mask = np.ones(adj.shape[0], dtype=bool)
    mask[[a, b]] = False
    return bool(np.array_equal(adj[a, mask], adj[b, mask]))


def _multiset_permutations(labels: List[int]) -> Iterator[Tuple[int, ...]]:
    """Distinct permutations of a multiset of labels."""
    counts: Dict[int, int] = {}
    for label in labels:
        counts[label] = counts.get(label, 0) + 1
    distinct = sorted(counts)
    size = len(labels)
    current: List[int] = []

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(current) == size:
            yield tuple(current)
            return
        for label in distinct:
            if counts[label]:
                counts[label] -= 1
                current.append(label)
                yield from extend()
                current.pop()
                counts[label] += 1

    yield from extend()


def _cell_orders(adj: np.ndarray, cell: List[int]) -> List[List[int]]:
    """Vertex orders of one cell, one per distinct arrangement of its twin classes."""
    classes = _twin_classes(adj, cell)
    if len(classes) == 1:
        return [list(cell)]
    labels = [k for k, group in enumerate(classes) for _ in group]
    orders = []
    for arrangement in _multiset_permutations(labels):
        cursor = [0] * len(classes)
        order = []
        for k in arrangement:
            order.append(classes[k][cursor[k]])
            cursor[k] += 1
        orders.append(order)
    return orders


def _component_code(adj: np.ndarray) -> bytes:
    n = adj.shape[0]
    if n == 1:
        return np.array([1, adj[0, 0]], dtype=">u4").tobytes()
    colours = _refine(adj)
    cells: Dict[int, List[int]] = {}
    for vertex, colour in enumerate(colours):
        cells.setdefault(colour, []).append(vertex)
    per_cell = [_cell_orders(adj, cells[c]) for c in sorted(cells)]
    rows, cols = np.triu_indices(n)

    best: Optional[Tuple[int, ...]] = None
    for combo in itertools.product(*per_cell):
        order = [vertex for part in combo for vertex in part]
        code = tuple(adj[np.ix_(order, order)][rows, cols].tolist())
        if best is None or code < best:
            best = code
    return np.array((n,) + best, dtype=">u4").tobytes()


def canonical_key(graph: Multigraph, key_vertex_limit: Optional[int] = None) -> CanonicalKey:
    """
    Isomorphism-invariant key of a small multigraph.

    Args:
        graph: Graph with at most key_vertex_limit vertices
        key_vertex_limit: Ceiling; defaults to settings.key_vertex_limit

    Returns:
        bytes key; equal keys iff isomorphic

    Raises:
        TooLargeForCanonicalization: v(G) above the ceiling
    """
    if key_vertex_limit is None:
        from ..config import settings

        key_vertex_limit = settings.key_vertex_limit
    if graph.n_vertices > key_vertex_limit:
        raise TooLargeForCanonicalization(graph.n_vertices, key_vertex_limit)
    if graph.n_vertices == 0:
        return GRAPH_PREFIX

    adj = _adjacency(graph)
    n_comp, labels = connected_components(
        coo_matrix((np.ones(graph.n_pairs), (graph.u, graph.v)), shape=adj.shape),
        directed=False,
    )
    codes = []
    for comp in range(n_comp):
        members = np.flatnonzero(labels == comp)
        codes.append(_component_code(adj[np.ix_(members, members)]))
    return GRAPH_PREFIX + b"".join(sorted(codes))
