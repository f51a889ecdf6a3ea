"""Seeded random-graph generators and small named fixtures.

All generators return simple graphs and are bit-for-bit reproducible from
their seed: one numpy PCG64 stream per call, consumed in a fixed order.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import CleanupStats, Graph, InputError, _csr_from_canonical

RNG_FAMILY = "numpy.random.default_rng (PCG64)"

NAMED_GRAPHS = ("cycle", "path", "star", "complete")

# give up on residual stubs once a pairing pass has failed this many times
# in a row; reshuffling cannot fix e.g. two stubs of the same vertex
_BARREN_PASS_LIMIT = 100


@dataclass
class GenSpec:
    """Bundle of generator parameters, as accepted by the CLI.

    model is one of "ba", "config_power_law", "copying", "named"; only the
    fields that model uses need to be set.
    """

    model: str
    n: int | None = None
    m: int | None = None
    gamma: float | None = None
    kmin: int = 1
    p: float | None = None
    name: str | None = None
    size: int | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.model == "ba":
            if self.n is None or self.m is None:
                raise InputError("ba model needs --n and --m")
            if not 1 <= self.m < self.n:
                raise InputError(f"--m must satisfy 1 <= m < n, got m={self.m} n={self.n}")
        elif self.model == "config_power_law":
            if self.n is None or self.gamma is None:
                raise InputError("config_power_law model needs --n and --gamma")
            if self.gamma <= 1:
                raise InputError(f"--gamma must be > 1, got {self.gamma}")
            if self.kmin < 1:
                raise InputError(f"--kmin must be >= 1, got {self.kmin}")
            if self.n < 2:
                raise InputError(f"--n must be >= 2, got {self.n}")
        elif self.model == "copying":
            if self.n is None or self.p is None:
                raise InputError("copying model needs --n and --p")
            if not 0 <= self.p <= 1:
                raise InputError(f"--p must be in [0, 1], got {self.p}")
            if self.n < 2:
                raise InputError(f"--n must be >= 2, got {self.n}")
        elif self.model == "named":
            if self.name is None or self.size is None:
                raise InputError("named model needs --name and --size")
            if self.name not in NAMED_GRAPHS:
                raise InputError(f"--name must be one of {NAMED_GRAPHS}, got {self.name!r}")
        else:
            raise InputError(f"unknown model {self.model!r}")

    def as_provenance(self) -> dict:
        out = {"model": self.model, "seed": self.seed, "rng": RNG_FAMILY}
        for key in ("n", "m", "gamma", "kmin", "p", "name", "size"):
            val = getattr(self, key)
            if val is not None and not (key == "kmin" and self.model != "config_power_law"):
                out[key] = val
        return out


def generate(spec: GenSpec) -> Graph:
    """Dispatch a GenSpec to the matching generator."""
    spec.validate()
    if spec.model == "ba":
        return barabasi_albert(spec.n, spec.m, spec.seed)
    if spec.model == "config_power_law":
        return configuration_power_law(spec.n, spec.gamma, spec.kmin, spec.seed)
    if spec.model == "copying":
        return copying_model(spec.n, spec.p, spec.seed)
    return named_graph(spec.name, spec.size)


def barabasi_albert(n: int, m: int, seed: int = 0) -> Graph:
    """Growth with preferential attachment.

    Starts from the clique on m+1 vertices; every further vertex picks m
    distinct existing vertices with probability proportional to degree
    (sampling an endpoint of a uniform random half-edge, redrawing until
    the m targets are distinct). The result is connected and has exactly
    C(m+1, 2) + (n - m - 1) * m edges.
    """
    if not 1 <= m < n:
        raise InputError(f"need 1 <= m < n, got m={m} n={n}")
    rng = np.random.default_rng(seed)
    clique = m + 1
    total_edges = clique * (clique - 1) // 2 + (n - clique) * m
    eu = np.empty(total_edges, dtype=np.int64)
    ev = np.empty(total_edges, dtype=np.int64)
    # endpoint pool: each vertex appears once per incident edge
    pool = np.empty(2 * total_edges, dtype=np.int64)
    k = 0
    filled = 0
    for i in range(clique):
        for j in range(i + 1, clique):
            eu[k] = i
            ev[k] = j
            pool[filled] = i
            pool[filled + 1] = j
            k += 1
            filled += 2
    for v in range(clique, n):
        chosen: list[int] = []
        seen = set()
        while len(chosen) < m:
            draw = rng.integers(0, filled, size=m - len(chosen))
            for idx in draw:
                t = int(pool[idx])
                if t not in seen:
                    seen.add(t)
                    chosen.append(t)
                    if len(chosen) == m:
                        break
        for t in chosen:
            eu[k] = t
            ev[k] = v
            pool[filled] = t
            pool[filled + 1] = v
            k += 1
            filled += 2
    return _csr_from_canonical(eu, ev, n)


def configuration_power_law(n: int, gamma: float, kmin: int = 1,
                            seed: int = 0) -> Graph:
    """Stub matching over an i.i.d. power-law degree sequence.

    Degrees are drawn from P(k) proportional to k^-gamma on
    [kmin, n^(1/(gamma-1))] (the natural cutoff), the sum is forced even by
    redrawing one entry, and stubs are paired by repeated shuffling.
    Pairings that would create a self-loop or repeated edge go back to the
    pool; stubs still unmatched when the retry budget runs out are dropped
    and counted in the result's cleanup stats.
    """
    if gamma <= 1:
        raise InputError(f"gamma must be > 1, got {gamma}")
    if kmin < 1:
        raise InputError(f"kmin must be >= 1, got {kmin}")
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    kmax = max(kmin, int(n ** (1.0 / (gamma - 1.0))))
    ks = np.arange(kmin, kmax + 1, dtype=np.int64)
    weights = ks.astype(np.float64) ** -gamma
    probs = weights / weights.sum()
    degrees = rng.choice(ks, size=n, p=probs)
    while degrees.sum() % 2:
        degrees[rng.integers(0, n)] = rng.choice(ks, p=probs)

    stubs = np.repeat(np.arange(n, dtype=np.int64), degrees)
    budget = 100 * stubs.size
    attempts = 0
    barren = 0
    accepted = set()
    edges: list[tuple[int, int]] = []
    leftover = stubs
    while leftover.size >= 2 and attempts < budget and barren < _BARREN_PASS_LIMIT:
        rng.shuffle(leftover)
        nxt: list[int] = []
        progress = 0
        for i in range(0, leftover.size - 1, 2):
            u = int(leftover[i])
            v = int(leftover[i + 1])
            attempts += 1
            if u == v:
                nxt.extend((u, v))
                continue
            key = (min(u, v), max(u, v))
            if key in accepted:
                nxt.extend((u, v))
                continue
            accepted.add(key)
            edges.append(key)
            progress += 1
        if leftover.size % 2:
            nxt.append(int(leftover[-1]))
        barren = 0 if progress else barren + 1
        leftover = np.array(nxt, dtype=np.int64)

    arr = np.array(edges, dtype=np.int64).reshape(-1, 2)
    stats = CleanupStats(dropped_stubs=int(leftover.size))
    return _csr_from_canonical(arr[:, 0], arr[:, 1], n, stats)


def copying_model(n: int, p: float, seed: int = 0) -> Graph:
    """Growth by neighbor copying.

    Starts from a single edge; each new vertex links to one uniformly
    random existing vertex and, independently with probability p, to each
    of that target's current neighbors.
    """
    if not 0 <= p <= 1:
        raise InputError(f"p must be in [0, 1], got {p}")
    if n < 2:
        raise InputError(f"n must be >= 2, got {n}")
    rng = np.random.default_rng(seed)
    adj: list[list[int]] = [[1], [0]] + [[] for _ in range(n - 2)]
    eu = [0]
    ev = [1]
    for v in range(2, n):
        t = int(rng.integers(0, v))
        linked = [t]
        for w in adj[t]:
            if rng.random() < p:
                linked.append(w)
        for x in linked:
            adj[x].append(v)
            eu.append(x)
            ev.append(v)
        adj[v] = linked
    return _csr_from_canonical(np.array(eu, dtype=np.int64),
                               np.array(ev, dtype=np.int64), n)


def copying_exponent_residual(gamma: float, p: float) -> float:
    """How far gamma is from solving gamma = 1 + 1/p - p^(gamma-2)."""
    return abs(gamma - (1.0 + 1.0 / p - p ** (gamma - 2.0)))


def copying_exponent_solve(p: float) -> float:
    """Degree exponent of the copying model for copy probability p.

    Solves gamma = 1 + 1/p - p^(gamma-2) on (1, 1 + 1/p] by bisection.
    gamma = 1 always satisfies the equation; when a second root exists
    (small p), it is the one returned, matching the stable fixed point of
    direct iteration. Final residual is far below 1e-10.
    """
    if p <= 0:
        raise InputError(f"p must be > 0 (1/p appears in the equation), got {p}")
    if p > 1:
        raise InputError(f"p must be <= 1, got {p}")

    def f(gamma: float) -> float:
        return gamma - 1.0 - 1.0 / p + p ** (gamma - 2.0)

    hi = 1.0 + 1.0 / p
    # look for a sign change; f(1) = 0 and f(hi) > 0, so any negative value
    # brackets the nontrivial root
    lo = None
    for offset in np.concatenate([np.logspace(-12, 0, 200)[:-1] * (hi - 1.0),
                                  np.linspace(0, hi - 1.0, 1024)[1:]]):
        g = 1.0 + float(offset)
        if f(g) < 0:
            lo = g
            break
    if lo is None:
        return 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return hi


def named_graph(name: str, size: int) -> Graph:
    """Standard small graphs: cycle, path, star (hub 0), complete."""
    if name in ("cycle", "complete"):
        least = 3
    elif name in ("path", "star"):
        least = 2
    else:
        raise InputError(f"unknown graph name {name!r}; use one of {NAMED_GRAPHS}")
    if size < least:
        raise InputError(f"{name} graph needs size >= {least}, got {size}")
    if name == "cycle":
        pairs = [(i, i + 1) for i in range(size - 1)] + [(0, size - 1)]
    elif name == "path":
        pairs = [(i, i + 1) for i in range(size - 1)]
    elif name == "star":
        pairs = [(0, i) for i in range(1, size)]
    else:
        pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    arr = np.array(pairs, dtype=np.int64)
    return _csr_from_canonical(arr[:, 0], arr[:, 1], size)
