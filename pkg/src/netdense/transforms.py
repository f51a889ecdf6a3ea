"""Graph densification: first-order subdivision, the line-graph operation,
and their composition.

Subdividing replaces every edge uv with a path u-w-v through a fresh vertex
w; the line graph turns every edge into a vertex, joining vertices whose
edges shared an endpoint. Composing the two maps a sparse graph to a dense
one built from one clique per original vertex plus one bridging edge per
original edge, and the provenance of every produced vertex is tracked.

Line-graph vertices are numbered by the lexicographic order of their base
edges (u, v) with u < v, which makes outputs reproducible and keeps the
provenance maps canonical. A useful consequence for the composed transform:
the half-edges of the seed graph, ordered by (vertex, neighbor), line up
exactly with the CSR positions of the seed's adjacency, so each seed
vertex's clique occupies a contiguous id range.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import (
    DegreeHistogram,
    Graph,
    _csr_from_canonical,
)

# Refuse to build line graphs past this many edges unless told otherwise;
# densification is quadratic in hub degree and must not OOM silently.
DEFAULT_EDGE_BUDGET = 2**31


class EdgeBudgetError(RuntimeError):
    """Line-graph output would exceed the edge budget."""

    def __init__(self, predicted_edges: int, budget: int):
        self.predicted_edges = predicted_edges
        self.budget = budget
        super().__init__(
            f"line graph would have {predicted_edges} edges, "
            f"over the budget of {budget}"
        )


@dataclass(frozen=True, eq=False)
class SubdivisionResult:
    """Subdivided graph plus the identity of every inserted vertex.

    Original vertices keep their ids; the vertex splitting edge i of
    ``base_edges`` gets id original_count + i.
    """

    graph: Graph
    original_count: int
    base_edges: np.ndarray  # (E, 2), canonical order of the input's edges

    @property
    def original_vertices(self) -> range:
        return range(self.original_count)

    @property
    def subdivision_vertices(self) -> range:
        return range(self.original_count, self.graph.vertex_count)

    def edge_of_subvertex(self, w: int) -> tuple[int, int]:
        """The original edge that subdivision vertex w was inserted on."""
        i = w - self.original_count
        if not 0 <= i < self.base_edges.shape[0]:
            raise IndexError(f"{w} is not a subdivision vertex")
        u, v = self.base_edges[i]
        return int(u), int(v)


@dataclass(frozen=True, eq=False)
class LineGraphResult:
    """Line graph plus the base edge each line vertex stands for."""

    graph: Graph
    base_edges: np.ndarray  # (E, 2), lexicographic
    vertex_of_edge: np.ndarray  # base edge index -> line vertex id

    def edge_of_vertex(self, x: int) -> tuple[int, int]:
        u, v = self.base_edges[x]
        return int(u), int(v)


@dataclass(frozen=True, eq=False)
class DensifyResult:
    """Densified graph with maps back to the seed graph.

    Every seed edge uv yields two vertices (one per half-edge, for the
    paths u-w and w-v through the subdivision vertex w); every seed vertex
    u of degree d yields a clique on d vertices, stored as the contiguous
    id range matching u's CSR segment in the seed.
    """

    graph: Graph
    seed: Graph
    half_edge_vertices: np.ndarray  # (E, 2): [u-side id, v-side id] per seed edge
    isolated_seed_vertices: int

    def clique_of_vertex(self, u: int) -> np.ndarray:
        """Ids of the line vertices forming seed vertex u's clique."""
        lo = int(self.seed.offsets[u])
        hi = int(self.seed.offsets[u + 1])
        return np.arange(lo, hi, dtype=np.int64)

    def line_vertex_of(self, edge_index: int, endpoint: int) -> int:
        """The vertex for the given half of seed edge ``edge_index``."""
        side = self.half_edge_vertices[edge_index]
        u_side, v_side = int(side[0]), int(side[1])
        # u-side vertex sits in endpoint u's CSR segment
        for vid in (u_side, v_side):
            if self.seed.offsets[endpoint] <= vid < self.seed.offsets[endpoint + 1]:
                return vid
        raise IndexError(f"vertex {endpoint} is not an endpoint of edge {edge_index}")


def _within_segment_pairs(offsets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Global index pairs (a < b) for all 2-subsets within each CSR segment."""
    sizes = np.diff(offsets)
    pair_counts = sizes * (sizes - 1) // 2
    total = int(pair_counts.sum())
    if total == 0:
        e = np.empty(0, dtype=np.int64)
        return e, e
    blocks = np.cumsum(pair_counts) - pair_counts
    r = np.arange(total, dtype=np.int64) - np.repeat(blocks, pair_counts)
    # local pair index r = b(b-1)/2 + a with 0 <= a < b; invert via sqrt,
    # then fix any rounding slip
    b = ((1.0 + np.sqrt(8.0 * r.astype(np.float64) + 1.0)) // 2.0).astype(np.int64)
    b[b * (b - 1) // 2 > r] -= 1
    b[(b + 1) * b // 2 <= r] += 1
    a = r - b * (b - 1) // 2
    starts = np.repeat(offsets[:-1][sizes > 0].astype(np.int64),
                       pair_counts[sizes > 0])
    return starts + a, starts + b


def _half_edge_order(g: Graph) -> np.ndarray:
    """CSR positions sorted by (edge, endpoint).

    Positions 2j and 2j+1 of the result are the two directed copies of the
    j-th canonical edge, smaller endpoint first.
    """
    srcs = np.repeat(np.arange(g.vertex_count, dtype=np.int64), g.degrees)
    dsts = g.targets.astype(np.int64)
    key = (np.minimum(srcs, dsts) << 32) | np.maximum(srcs, dsts)
    return np.lexsort((srcs, key))


def _edge_ids_by_position(g: Graph) -> np.ndarray:
    """For each CSR position, the canonical index of its undirected edge."""
    order = _half_edge_order(g)
    eid = np.empty(order.size, dtype=np.int64)
    eid[order] = np.repeat(np.arange(order.size // 2, dtype=np.int64), 2)
    return eid


def subdivide(g: Graph) -> SubdivisionResult:
    """Insert one fresh vertex in the middle of every edge."""
    n = g.vertex_count
    edges = g.edge_array()
    e = edges.shape[0]
    sub_ids = np.arange(n, n + e, dtype=np.int64)
    eu = np.concatenate([edges[:, 0], edges[:, 1]])
    ev = np.concatenate([sub_ids, sub_ids])
    graph = _csr_from_canonical(eu, ev, n + e)
    return SubdivisionResult(graph=graph, original_count=n, base_edges=edges)


def predicted_line_edge_count(g: Graph) -> int:
    """Edges the line graph will have: sum over vertices of C(deg, 2)."""
    d = g.degrees
    return int((d * (d - 1) // 2).sum())


def line_graph(g: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> LineGraphResult:
    """Build the line graph: one vertex per edge, adjacency = shared endpoint."""
    predicted = predicted_line_edge_count(g)
    if predicted > max_edges:
        raise EdgeBudgetError(predicted, max_edges)
    e = g.edge_count
    eid = _edge_ids_by_position(g)
    left, right = _within_segment_pairs(g.offsets)
    # within one vertex's segment the edge ids ascend, so eid[left] < eid[right]
    graph = _csr_from_canonical(eid[left], eid[right], e)
    return LineGraphResult(graph=graph, base_edges=g.edge_array(),
                           vertex_of_edge=np.arange(e, dtype=np.int64))


def densify(g: Graph, max_edges: int = DEFAULT_EDGE_BUDGET) -> DensifyResult:
    """Subdivide every edge, then take the line graph.

    The result has exactly 2|E| vertices; each seed vertex of degree d
    contributes a d-clique and each seed edge one bridging edge between its
    two halves. Isolated seed vertices have no incident edges and therefore
    vanish; their count is recorded.
    """
    sres = subdivide(g)
    lres = line_graph(sres.graph, max_edges=max_edges)
    order = _half_edge_order(g)
    half = order.reshape(-1, 2).astype(np.int64)
    isolated = int(np.count_nonzero(g.degrees == 0))
    return DensifyResult(graph=lres.graph, seed=g, half_edge_vertices=half,
                         isolated_seed_vertices=isolated)


def predicted_degree_multiplicities(h: DegreeHistogram) -> DegreeHistogram:
    """Degree histogram the densified graph must have: k -> k * n_k.

    Degree-0 entries vanish (isolated vertices have no half-edges); the
    returned total is the number of half-edges, 2|E|.
    """
    counts = {k: k * n for k, n in h.counts.items() if k > 0}
    return DegreeHistogram(counts=counts, total=sum(counts.values()))
