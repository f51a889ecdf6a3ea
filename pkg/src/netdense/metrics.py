"""Scalar and distributional graph measurements.

Covers degree moments and the generating-function identities for line-graph
average degree, discrete power-law fitting by maximum likelihood, degree
assortativity, triangle-based clustering, exact and double-sweep diameter,
and the closed-form predictions used by the densification experiments.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit
from scipy.optimize import brentq

from .graph import (
    DegreeHistogram,
    Graph,
    InputError,
    _bfs_levels,
)


@dataclass(frozen=True)
class MomentSummary:
    """First two degree moments plus generating-function derivatives at 1.

    gf_first is G'(1) = <k>; gf_second is G''(1) = <k^2> - <k> and is
    computed as exactly that difference so the identity holds bit-for-bit.
    """

    mean_degree: float
    second_moment: float
    gf_first: float
    gf_second: float


@dataclass(frozen=True)
class PowerLawFit:
    gamma_hat: float
    kmin_used: int
    ks_distance: float
    n_tail: int
    valid: bool


@dataclass(frozen=True)
class AssortativityReport:
    r: float
    defined: bool


@dataclass(frozen=True)
class ClusteringReport:
    global_c: float
    avg_local_c: float
    per_degree_c: dict[int, float]


@dataclass(frozen=True)
class DiameterReport:
    diameter: int | None
    lower_bound: int
    exact: bool


def moments(h: DegreeHistogram) -> MomentSummary:
    """Mean degree, second moment, and G'(1), G''(1) of the histogram."""
    if h.total <= 0:
        raise InputError("moments of an empty histogram are undefined")
    sk = sum(k * n for k, n in h.counts.items())
    sk2 = sum(k * k * n for k, n in h.counts.items())
    mean = sk / h.total
    second = sk2 / h.total
    return MomentSummary(mean_degree=mean, second_moment=second,
                         gf_first=mean, gf_second=second - mean)


def line_avg_degree_gf(m: MomentSummary) -> float:
    """Generating-function ratio G''(1)/G'(1) = (<k^2> - <k>) / <k>.

    This is the textbook estimate for the line graph's average degree; see
    line_avg_degree_exact for the identity that the constructed line graph
    actually satisfies. Reports show both.
    """
    if m.mean_degree <= 0:
        raise InputError("line-graph average degree needs mean degree > 0")
    return m.gf_second / m.gf_first


def line_avg_degree_exact(m: MomentSummary) -> float:
    """Exact line-graph average degree 2<k^2>/<k> - 2.

    Follows from |E'| = sum C(deg, 2) and |V'| = |E|; matches the
    constructed line graph for every simple graph.
    """
    if m.mean_degree <= 0:
        raise InputError("line-graph average degree needs mean degree > 0")
    return 2.0 * m.second_moment / m.mean_degree - 2.0


# ---------------------------------------------------------------------------
# power-law fitting


def _tail_log_mean(ks: np.ndarray, ns: np.ndarray) -> float:
    return float((ns * np.log(ks)).sum() / ns.sum())


def _mle_gamma(ks: np.ndarray, ns: np.ndarray, kmin: int, kmax: int) -> float:
    """Maximum-likelihood exponent for counts ns at degrees ks >= kmin.

    The model is P(k) = k^-gamma / Z with Z summed over [kmin, kmax]; the
    score equation sets the model's mean log k to the observed one.
    """
    support = np.arange(kmin, kmax + 1, dtype=np.float64)
    logs = np.log(support)
    target = _tail_log_mean(ks, ns)

    def score(gamma: float) -> float:
        w = support ** -gamma
        return float((w * logs).sum() / w.sum()) - target

    lo, hi = 1.0 + 1e-9, 30.0
    s_lo, s_hi = score(lo), score(hi)
    if s_lo <= 0:
        return lo
    if s_hi >= 0:
        return hi
    return float(brentq(score, lo, hi, xtol=1e-10))


def _ks_distance(ks: np.ndarray, ns: np.ndarray, gamma: float,
                 kmin: int, kmax: int) -> float:
    support = np.arange(kmin, kmax + 1, dtype=np.float64)
    w = support ** -gamma
    model_cdf = np.cumsum(w) / w.sum()
    emp_cdf = np.cumsum(ns) / ns.sum()
    at = (ks - kmin).astype(np.int64)
    return float(np.abs(emp_cdf - model_cdf[at]).max())


def fit_power_law(h: DegreeHistogram, kmin: int | None = None) -> PowerLawFit:
    """Discrete power-law MLE with truncated-zeta normalization.

    With no kmin, every observed degree is tried as the cutoff and the fit
    with the smallest Kolmogorov-Smirnov distance wins. A fit needs at
    least 10 tail samples over at least 2 distinct degrees to be valid.
    """
    ks_all, ns_all = h.as_arrays()
    pos = ks_all >= 1
    ks_all, ns_all = ks_all[pos], ns_all[pos]
    if ks_all.size == 0:
        return PowerLawFit(math.nan, kmin or 0, math.nan, 0, valid=False)
    kmax = int(ks_all.max())
    candidates = [int(kmin)] if kmin is not None else [int(k) for k in ks_all]

    best: PowerLawFit | None = None
    for cut in candidates:
        mask = ks_all >= cut
        ks, ns = ks_all[mask], ns_all[mask]
        n_tail = int(ns.sum())
        if n_tail < 10 or ks.size < 2:
            continue
        gamma = _mle_gamma(ks, ns, cut, kmax)
        dist = _ks_distance(ks, ns, gamma, cut, kmax)
        fit = PowerLawFit(gamma, cut, dist, n_tail, valid=True)
        if best is None or fit.ks_distance < best.ks_distance:
            best = fit
    if best is None:
        n_tail = int(ns_all[ks_all >= (kmin or 1)].sum())
        return PowerLawFit(math.nan, kmin or int(ks_all[0]), math.nan,
                           n_tail, valid=False)
    return best


# ---------------------------------------------------------------------------
# assortativity


def assortativity(g: Graph) -> AssortativityReport:
    """Pearson correlation of endpoint degrees over the edge list.

    Each undirected edge enters once; the symmetric (k_i + k_j)/2 and
    (k_i^2 + k_j^2)/2 terms make orientation irrelevant. When the degree
    variance over edges vanishes (regular graphs) the coefficient is
    undefined and ``defined`` is False.
    """
    if g.edge_count == 0:
        raise InputError("assortativity needs at least one edge")
    edges = g.edge_array()
    deg = g.degrees.astype(np.float64)
    ki = deg[edges[:, 0]]
    kj = deg[edges[:, 1]]
    m_prod = float(np.mean(ki * kj))
    m_sum = float(np.mean(0.5 * (ki + kj)))
    m_sq = float(np.mean(0.5 * (ki * ki + kj * kj)))
    num = m_prod - m_sum * m_sum
    den = m_sq - m_sum * m_sum
    if den <= 1e-12 * m_sq:
        return AssortativityReport(math.nan, defined=False)
    r = num / den
    return AssortativityReport(max(-1.0, min(1.0, r)), defined=True)


# ---------------------------------------------------------------------------
# clustering


@njit(cache=True)
def _edge_intersections(offsets, targets):
    """Per-vertex sum of |N(u) & N(v)| over incident edges (= 2 triangles)."""
    n = offsets.size - 1
    acc = np.zeros(n, dtype=np.int64)
    for u in range(n):
        su = offsets[u]
        eu = offsets[u + 1]
        for pos in range(su, eu):
            v = targets[pos]
            if v <= u:
                continue
            i = su
            j = offsets[v]
            ej = offsets[v + 1]
            c = 0
            while i < eu and j < ej:
                a = targets[i]
                b = targets[j]
                if a == b:
                    c += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
            acc[u] += c
            acc[v] += c
    return acc


def triangle_counts(g: Graph) -> np.ndarray:
    """Number of triangles through each vertex (sorted-merge intersection)."""
    acc = _edge_intersections(g.offsets, g.targets)
    return acc // 2


def global_clustering(g: Graph) -> float:
    """Transitivity: 3 * triangles / connected triples (0 when no triples)."""
    t = triangle_counts(g)
    d = g.degrees
    triples = int((d * (d - 1) // 2).sum())
    if triples == 0:
        return 0.0
    return float(int(t.sum()) / triples)


def local_clustering(g: Graph) -> np.ndarray:
    """Per-vertex clustering t_u / C(deg_u, 2); degree < 2 contributes 0."""
    t = triangle_counts(g).astype(np.float64)
    d = g.degrees
    wedges = (d * (d - 1) // 2).astype(np.float64)
    out = np.zeros(g.vertex_count, dtype=np.float64)
    ok = wedges > 0
    out[ok] = t[ok] / wedges[ok]
    return out


def avg_local_clustering(g: Graph) -> ClusteringReport:
    """Average local clustering plus per-degree means and transitivity.

    The per-degree mean at k divides the integer triangle total by the
    integer wedge total (all vertices of one degree share the denominator
    C(k, 2), so this is the exact mean of the per-vertex coefficients).
    """
    t = triangle_counts(g)
    d = g.degrees
    wedge_per_vertex = d * (d - 1) // 2
    triples = int(wedge_per_vertex.sum())
    global_c = float(int(t.sum()) / triples) if triples else 0.0

    local = np.zeros(g.vertex_count, dtype=np.float64)
    ok = wedge_per_vertex > 0
    local[ok] = t[ok].astype(np.float64) / wedge_per_vertex[ok].astype(np.float64)
    avg_local = float(local.mean()) if g.vertex_count else 0.0

    per_degree: dict[int, float] = {}
    if g.vertex_count:
        max_d = int(d.max())
        vert_count = np.bincount(d, minlength=max_d + 1)
        tri_sum = np.bincount(d, weights=t.astype(np.float64), minlength=max_d + 1)
        for k in range(max_d + 1):
            nk = int(vert_count[k])
            if nk == 0:
                continue
            if k < 2:
                per_degree[k] = 0.0
            else:
                per_degree[k] = float(tri_sum[k] / (nk * (k * (k - 1) // 2)))
    return ClusteringReport(global_c=global_c, avg_local_c=avg_local,
                            per_degree_c=per_degree)


# ---------------------------------------------------------------------------
# diameter


def _require_connected(g: Graph) -> None:
    if g.vertex_count == 0:
        raise InputError("diameter of an empty graph is undefined")
    if np.any(_bfs_levels(g, 0) < 0):
        raise InputError("graph is disconnected; pass its largest component")


def diameter_exact(g: Graph) -> DiameterReport:
    """Maximum BFS eccentricity over all sources. Connected input only."""
    _require_connected(g)
    best = 0
    for s in range(g.vertex_count):
        ecc = int(_bfs_levels(g, s).max())
        if ecc > best:
            best = ecc
    return DiameterReport(diameter=best, lower_bound=best, exact=True)


def diameter_double_sweep(g: Graph, seed: int = 0) -> DiameterReport:
    """Diameter lower bound from two BFS sweeps (exact on trees)."""
    _require_connected(g)
    rng = np.random.default_rng(seed)
    start = int(rng.integers(0, g.vertex_count))
    d1 = _bfs_levels(g, start)
    far = int(np.argmax(d1))
    lb = int(_bfs_levels(g, far).max())
    return DiameterReport(diameter=None, lower_bound=lb, exact=False)


# ---------------------------------------------------------------------------
# closed-form predictions


def harmonic_partial_sum(vmin: int, vmax: int) -> float:
    """Sum of 1/i for i in [vmin, vmax], compensated (math.fsum)."""
    if not 1 <= vmin <= vmax:
        raise InputError(f"need 1 <= vmin <= vmax, got [{vmin}, {vmax}]")
    return math.fsum(1.0 / i for i in range(vmin, vmax + 1))


def predicted_dense_avg_degree(gamma_prime: float, kmax: int,
                               kmin: int = 1) -> float:
    """Predicted average degree of a power-law graph with exponent in (1, 2].

    kmax^(2-gamma') / (2-gamma') below 2; the truncated harmonic sum at
    exactly 2. Grows without bound as kmax does, which is the densification
    claim this package exists to check.
    """
    if not 1 < gamma_prime <= 2:
        raise InputError(f"gamma_prime must be in (1, 2], got {gamma_prime}")
    if not 1 <= kmin <= kmax:
        raise InputError(f"need 1 <= kmin <= kmax, got [{kmin}, {kmax}]")
    if gamma_prime == 2:
        return harmonic_partial_sum(kmin, kmax)
    return kmax ** (2.0 - gamma_prime) / (2.0 - gamma_prime)


def max_degree(g: Graph) -> int:
    if g.vertex_count == 0:
        raise InputError("max degree of an empty graph is undefined")
    if g.edge_count == 0:
        return 0
    return int(g.degrees.max())
