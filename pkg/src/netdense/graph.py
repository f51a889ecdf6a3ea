"""Compact immutable undirected simple graph with CSR adjacency.

Vertices are dense integer ids in [0, n). Neighbor lists are stored as a
single sorted target array plus per-vertex offsets, so iteration is
deterministic and membership tests are O(log deg). Every other module in
the package consumes this representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Vertex ids must fit in 31 bits: targets are stored as int32 and edge keys
# are packed two-per-int64 during construction.
MAX_VERTICES = 2**31 - 1

# Distance value reported for unreachable vertices.
UNREACHABLE = math.inf


class InputError(ValueError):
    """Raised when an operation receives arguments outside its contract."""


@dataclass(frozen=True)
class CleanupStats:
    """What construction had to drop to keep the graph simple."""

    self_loops: int = 0
    duplicate_edges: int = 0
    dropped_stubs: int = 0


_NO_CLEANUP = CleanupStats()


class Graph:
    """Immutable simple undirected graph.

    Build instances with :func:`build_from_edges` (or a generator /
    transform); the constructor trusts its arguments.
    """

    __slots__ = ("_offsets", "_targets", "cleanup")

    def __init__(self, offsets: np.ndarray, targets: np.ndarray,
                 cleanup: CleanupStats = _NO_CLEANUP):
        offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        targets = np.ascontiguousarray(targets, dtype=np.int32)
        offsets.setflags(write=False)
        targets.setflags(write=False)
        self._offsets = offsets
        self._targets = targets
        self.cleanup = cleanup

    @property
    def vertex_count(self) -> int:
        return self._offsets.size - 1

    @property
    def edge_count(self) -> int:
        return self._targets.size // 2

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def targets(self) -> np.ndarray:
        return self._targets

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._offsets)

    def degree(self, u: int) -> int:
        return int(self._offsets[u + 1] - self._offsets[u])

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of u (a read-only view)."""
        return self._targets[self._offsets[u]:self._offsets[u + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = np.searchsorted(nbrs, v)
        return i < nbrs.size and nbrs[i] == v

    def edge_array(self) -> np.ndarray:
        """All edges as an (E, 2) int64 array, u < v, lexicographically sorted."""
        srcs = np.repeat(np.arange(self.vertex_count, dtype=np.int64),
                         self.degrees)
        tgts = self._targets.astype(np.int64)
        keep = srcs < tgts
        return np.stack([srcs[keep], tgts[keep]], axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._offsets.shape == other._offsets.shape
                and np.array_equal(self._offsets, other._offsets)
                and np.array_equal(self._targets, other._targets))

    def __hash__(self):
        return hash((self.vertex_count, self.edge_count))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeHistogram:
    """Count of vertices per degree value.

    counts maps degree k to the number of vertices with that degree (only
    degrees that occur are present); total is the vertex count.
    """

    counts: dict[int, int]
    total: int

    @property
    def stub_count(self) -> int:
        """Sum of k * n_k, i.e. twice the edge count."""
        return sum(k * n for k, n in self.counts.items())

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(degrees, counts) as sorted parallel int64 arrays."""
        ks = np.array(sorted(self.counts), dtype=np.int64)
        ns = np.array([self.counts[int(k)] for k in ks], dtype=np.int64)
        return ks, ns


def _csr_from_canonical(eu: np.ndarray, ev: np.ndarray, n: int,
                        cleanup: CleanupStats = _NO_CLEANUP) -> Graph:
    """Build a Graph from unique canonical edges (eu[i] < ev[i]), trusted."""
    counts = np.bincount(eu, minlength=n) + np.bincount(ev, minlength=n)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offsets[1:])
    # Pack (src, dst) into one int64 key; sorting it yields CSR order with
    # each neighbor list ascending.
    key = np.empty(2 * eu.size, dtype=np.int64)
    key[:eu.size] = (eu.astype(np.int64) << 32) | ev
    key[eu.size:] = (ev.astype(np.int64) << 32) | eu
    key.sort()
    targets = (key & 0xFFFFFFFF).astype(np.int32)
    return Graph(offsets, targets, cleanup)


def build_from_edges(edges, n: int | None = None) -> Graph:
    """Construct a simple Graph from (u, v) pairs.

    Self-loops and duplicate pairs (in either orientation) are dropped and
    counted in the result's ``cleanup`` stats. If ``n`` is given it fixes
    the vertex count (ids must be < n); otherwise n = max id + 1.
    """
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise InputError("edges must be (u, v) pairs")
    if arr.size and arr.min() < 0:
        raise InputError("vertex ids must be non-negative")
    max_id = int(arr.max()) if arr.size else -1
    if n is None:
        n = max_id + 1
    elif max_id >= n:
        raise InputError(f"vertex id {max_id} out of range for n={n}")
    if n > MAX_VERTICES:
        raise InputError(f"vertex count {n} exceeds limit {MAX_VERTICES}")

    loops = arr[:, 0] == arr[:, 1]
    n_loops = int(loops.sum())
    if n_loops:
        arr = arr[~loops]
    u = np.minimum(arr[:, 0], arr[:, 1])
    v = np.maximum(arr[:, 0], arr[:, 1])
    key = (u << 32) | v
    key = np.sort(key)
    if key.size:
        fresh = np.empty(key.size, dtype=bool)
        fresh[0] = True
        np.not_equal(key[1:], key[:-1], out=fresh[1:])
        n_dups = key.size - int(fresh.sum())
        key = key[fresh]
    else:
        n_dups = 0
    eu = (key >> 32).astype(np.int64)
    ev = (key & 0xFFFFFFFF).astype(np.int64)
    stats = CleanupStats(self_loops=n_loops, duplicate_edges=n_dups)
    return _csr_from_canonical(eu, ev, n, stats)


def degree_histogram(g: Graph) -> DegreeHistogram:
    h = np.bincount(g.degrees)
    counts = {int(k): int(c) for k, c in enumerate(h) if c}
    return DegreeHistogram(counts=counts, total=g.vertex_count)


def average_degree(g: Graph) -> float:
    if g.vertex_count == 0:
        raise InputError("average degree of an empty graph is undefined")
    return 2.0 * g.edge_count / g.vertex_count


def _gather_neighbors(g: Graph, frontier: np.ndarray) -> np.ndarray:
    """All targets adjacent to the frontier vertices (with repeats)."""
    starts = g.offsets[frontier]
    counts = g.offsets[frontier + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=np.int32)
    # position j of the output maps into targets via repeat arithmetic
    idx = np.repeat(starts, counts)
    shift = np.arange(total, dtype=np.int64)
    shift -= np.repeat(np.cumsum(counts) - counts, counts)
    return g.targets[idx + shift]


def _bfs_levels(g: Graph, source: int) -> np.ndarray:
    """Hop counts from source as int64; -1 marks unreachable (internal)."""
    n = g.vertex_count
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    mask = np.zeros(n, dtype=bool)
    while frontier.size:
        level += 1
        nbrs = _gather_neighbors(g, frontier)
        nbrs = nbrs[dist[nbrs] < 0]
        if nbrs.size == 0:
            break
        dist[nbrs] = level
        mask[nbrs] = True
        frontier = np.flatnonzero(mask)
        mask[frontier] = False
    return dist


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Shortest-path hop counts from source; unreachable entries are inf."""
    if not 0 <= source < g.vertex_count:
        raise InputError(f"source {source} out of range for n={g.vertex_count}")
    dist = _bfs_levels(g, source).astype(np.float64)
    dist[dist < 0] = UNREACHABLE
    return dist


def connected_components(g: Graph) -> np.ndarray:
    """Component label per vertex; labels ordered by smallest member id."""
    n = g.vertex_count
    labels = np.full(n, -1, dtype=np.int64)
    comp = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        reach = _bfs_levels(g, s) >= 0
        labels[reach] = comp
        comp += 1
    return labels


def largest_component(g: Graph) -> tuple[Graph, np.ndarray]:
    """Extract the largest connected component.

    Returns the component as a new Graph plus the relabel map old -> new
    (length n, -1 for vertices outside the component). Size ties go to the
    component containing the smallest vertex id.
    """
    n = g.vertex_count
    if n == 0:
        return g, np.empty(0, dtype=np.int64)
    labels = connected_components(g)
    sizes = np.bincount(labels)
    best = int(np.argmax(sizes))  # first maximum = smallest contained id
    keep = labels == best
    old_ids = np.flatnonzero(keep)
    old_to_new = np.full(n, -1, dtype=np.int64)
    old_to_new[old_ids] = np.arange(old_ids.size)
    degs = g.degrees
    offsets = np.zeros(old_ids.size + 1, dtype=np.int64)
    np.cumsum(degs[old_ids], out=offsets[1:])
    srcs = np.repeat(np.arange(n, dtype=np.int64), degs)
    tgts = g.targets[keep[srcs]]
    targets = old_to_new[tgts].astype(np.int32)
    return Graph(offsets, targets), old_to_new


def is_bipartite(g: Graph) -> bool:
    """True when the vertices 2-color with no monochromatic edge."""
    n = g.vertex_count
    parity = np.full(n, -1, dtype=np.int64)
    for s in range(n):
        if parity[s] >= 0:
            continue
        dist = _bfs_levels(g, s)
        reach = dist >= 0
        parity[reach] = dist[reach] & 1
    srcs = np.repeat(np.arange(n, dtype=np.int64), g.degrees)
    return not bool(np.any(parity[srcs] == parity[g.targets]))
