"""Shared fixtures and independent oracles for the test suite.

Oracles here deliberately avoid the package's computation paths: matrices
are rebuilt from the edge list, triangles come from a full triple scan,
component counts from a fresh BFS, and eigenvalues from numpy's LAPACK
wrapper.
"""

from __future__ import annotations

import itertools
from collections import deque

import numpy as np

from sglap import GeneratorConfig, SignedGraph, generate

# Small named graphs.  Naming: K/P/STAR + size + signature (P all-positive,
# N all-negative, M mixed).
K1 = SignedGraph.from_edges(1, [])
K2P = SignedGraph.from_edges(2, [(1, 2, 1)])
K2N = SignedGraph.from_edges(2, [(1, 2, -1)])
K3P = SignedGraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
K3N = SignedGraph.from_edges(3, [(1, 2, -1), (2, 3, -1), (1, 3, -1)])
K3M = SignedGraph.from_edges(3, [(1, 2, 1), (2, 3, 1), (1, 3, -1)])
P3P = SignedGraph.from_edges(3, [(1, 2, 1), (2, 3, 1)])
P3N = SignedGraph.from_edges(3, [(1, 2, -1), (2, 3, -1)])
STAR3P = SignedGraph.from_edges(4, [(1, 2, 1), (1, 3, 1), (1, 4, 1)])
K3P_K3N = SignedGraph.from_edges(
    6, [(1, 2, 1), (2, 3, 1), (1, 3, 1), (4, 5, -1), (5, 6, -1), (4, 6, -1)]
)
EMPTY3 = SignedGraph.from_edges(3, [])


def oracle_laplacian(g: SignedGraph) -> np.ndarray:
    """Integer Laplacian built directly from the edge list."""
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for e in g.edges:
        m[e.i - 1, e.j - 1] = -e.sign
        m[e.j - 1, e.i - 1] = -e.sign
        m[e.i - 1, e.i - 1] += 1
        m[e.j - 1, e.j - 1] += 1
    return m


def oracle_eigs(matrix: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues via LAPACK (independent of the Jacobi path)."""
    return np.linalg.eigvalsh(matrix.astype(np.float64))


def oracle_rayleigh(g: SignedGraph, k: int) -> int:
    """x^T L^k x at x = all-ones by explicit integer matrix products."""
    lap = oracle_laplacian(g)
    ones = np.ones(g.n, dtype=np.int64)
    acc = ones
    for _ in range(k):
        acc = lap @ acc
    return int(ones @ acc)


def oracle_trace(g: SignedGraph, k: int) -> int:
    lap = oracle_laplacian(g)
    power = np.linalg.matrix_power(lap, k)
    return int(np.trace(power))


def oracle_triangles(g: SignedGraph) -> tuple[int, int, int]:
    """(t, t_pos, t_neg) from a brute-force scan of all vertex triples."""
    sign_of = {(e.i, e.j): e.sign for e in g.edges}
    t_pos = t_neg = 0
    for a, b, c in itertools.combinations(range(1, g.n + 1), 3):
        if (a, b) in sign_of and (b, c) in sign_of and (a, c) in sign_of:
            if sign_of[(a, b)] * sign_of[(b, c)] * sign_of[(a, c)] > 0:
                t_pos += 1
            else:
                t_neg += 1
    return t_pos + t_neg, t_pos, t_neg


def _adjacency_sets(g: SignedGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for e in g.edges:
        adj[e.i].add(e.j)
        adj[e.j].add(e.i)
    return adj


def oracle_components(g: SignedGraph) -> int:
    """Component count by BFS, ignoring signs."""
    adj = _adjacency_sets(g)
    seen: set[int] = set()
    count = 0
    for root in range(1, g.n + 1):
        if root in seen:
            continue
        count += 1
        queue = deque([root])
        seen.add(root)
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return count


def oracle_bipartite_components(g: SignedGraph) -> int:
    """Count of 2-colorable components by BFS coloring."""
    adj = _adjacency_sets(g)
    color: dict[int, int] = {}
    count = 0
    for root in range(1, g.n + 1):
        if root in color:
            continue
        color[root] = 0
        good = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    good = False
        if good:
            count += 1
    return count


def direct_unsigned_bounds(g: SignedGraph) -> dict[str, float | None]:
    """Unsigned-corollary formulas computed from scratch, None when guarded off.

    Everything (degrees, component counts, triangles) is recomputed here
    from the edge list so the values are independent of the package's
    delegation path.
    """
    import math

    deg = [0] * g.n
    for e in g.edges:
        deg[e.i - 1] += 1
        deg[e.j - 1] += 1
    n, m = g.n, g.m
    s1 = sum(deg)
    s2 = sum(d * d for d in deg)
    s3 = sum(d ** 3 for d in deg)
    c = oracle_components(g)
    cb = oracle_bipartite_components(g)
    t, _, _ = oracle_triangles(g)
    sum_didj = sum(deg[e.i - 1] * deg[e.j - 1] for e in g.edges)
    connected = c == 1

    def ub(r):
        mean = s1 / r
        rad = (s1 + s2) - (s1 + s2 + s1 * s1) / r + mean * mean
        return mean + math.sqrt(max(rad, 0.0))

    def tr1(r):
        if r < 2:
            return None
        return math.sqrt(abs(s1 * s1 - s2 - s1) / (r * (r - 1)))

    def tr2(r, tri):
        if r < 3:
            return None
        num = abs(2 * s3 + 6 * s2 - 3 * s2 * s1 + s1 ** 3 - 3 * s1 * s1 - 12 * tri)
        return (num / (r * (r - 1) * (r - 2))) ** (1.0 / 3.0)

    def tr3(r, tri):
        if r < 2:
            return None
        num = abs(s1 * s1 - 3 * s2 + s1 * s2 - s3 + 6 * tri)
        return (num / (r * (r - 1))) ** (1.0 / 3.0)

    return {
        "NEQ-SLB-1": 2 * s1 / n if connected else None,
        "NEQ-SLB-2": math.sqrt(4 * s2 / n) if connected else None,
        "NEQ-SLB-3": ((4 * s3 + 8 * sum_didj) / n) ** (1.0 / 3.0) if connected else None,
        "UB-L": ub(n - c) if m >= 1 else None,
        "UB-SL": ub(n - cb) if m >= 1 else None,
        "LB-TR-L-1": tr1(n - c),
        "LB-TR-L-2": tr2(n - c, t),
        "LB-TR-L-3": tr3(n - c, t),
        "LB-TR-SL-1": tr1(n - cb),
        "LB-TR-SL-2": tr2(n - cb, -t),
        "LB-TR-SL-3": tr3(n - cb, -t),
    }


def random_graphs(count: int, *, base_seed: int, n_max: int = 12, n_min: int = 2,
                  neg_prob: float = 0.5, connected: bool = False,
                  prob_lo: float = 0.2, prob_hi: float = 0.8) -> list[SignedGraph]:
    """Deterministic corpus of random graphs cycling size and edge density."""
    span = n_max - n_min + 1
    graphs = []
    for t in range(count):
        cfg = GeneratorConfig(
            n=n_min + (t % span),
            edge_prob=prob_lo + (prob_hi - prob_lo) * ((t % 7) / 6.0),
            neg_prob=neg_prob,
            seed=base_seed + t,
            require_connected=connected,
        )
        graphs.append(generate(cfg))
    return graphs
