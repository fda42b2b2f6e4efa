"""Signed-graph data model, edge-list text format, and degree/triangle statistics.

Vertices are numbered 1..n.  Edges are unordered pairs carrying a sign of
+1 or -1; graphs are simple (no loops, no parallel edges).  All types are
immutable after construction; every operation here is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "GraphFormatError",
    "SignedEdge",
    "SignedGraph",
    "DegreeProfile",
    "TriangleStats",
    "parse_signed_graph",
    "serialize_signed_graph",
    "degree_profile",
    "triangle_stats",
]

_SIGN_TOKENS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


class GraphFormatError(ValueError):
    """Malformed edge-list input; ``line_no`` is the offending 1-based line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class SignedEdge(NamedTuple):
    i: int
    j: int
    sign: int


@dataclass(frozen=True)
class SignedGraph:
    """A simple undirected graph on vertices 1..n with +1/-1 edge signs.

    ``edges`` holds normalized ``SignedEdge`` records with ``i < j``.
    Construct directly with an already-normalized frozenset, or use
    :meth:`from_edges` to normalize arbitrary (i, j, sign) triples.
    """

    n: int
    edges: frozenset[SignedEdge]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        pairs = set()
        for e in self.edges:
            if not (1 <= e.i < e.j <= self.n):
                raise ValueError(f"edge {e} out of range for n={self.n} (need 1 <= i < j <= n)")
            if e.sign not in (1, -1):
                raise ValueError(f"edge {e} has sign {e.sign!r}, expected +1 or -1")
            if (e.i, e.j) in pairs:
                raise ValueError(f"duplicate edge between {e.i} and {e.j}")
            pairs.add((e.i, e.j))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int, int]]) -> "SignedGraph":
        """Build a graph, normalizing each (i, j, sign) triple to i < j."""
        normalized = []
        seen = set()
        for i, j, sign in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            a, b = (i, j) if i < j else (j, i)
            if (a, b) in seen:
                raise ValueError(f"duplicate edge between {a} and {b}")
            seen.add((a, b))
            normalized.append(SignedEdge(a, b, sign))
        return cls(n, frozenset(normalized))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def sorted_edges(self) -> list[SignedEdge]:
        return sorted(self.edges)

    def underlying_pairs(self) -> frozenset[tuple[int, int]]:
        """Edge set of the underlying unsigned graph."""
        return frozenset((e.i, e.j) for e in self.edges)

    def neighbor_map(self) -> dict[int, tuple[tuple[int, int], ...]]:
        """Map each vertex to its sorted (neighbor, sign) pairs."""
        acc: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, self.n + 1)}
        for e in self.edges:
            acc[e.i].append((e.j, e.sign))
            acc[e.j].append((e.i, e.sign))
        return {v: tuple(sorted(pairs)) for v, pairs in acc.items()}


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree statistics and their aggregates.

    Attributes:
        d: degree of each vertex.
        d_pos, d_neg: counts of incident positive / negative edges.
        d_net: d_pos - d_neg per vertex.
        avg2: mean degree over each vertex's neighbors; ``None`` marks an
            isolated vertex (the quantity is undefined there, never 0).
        s1, s2, s3: sums of degree powers (s1 equals twice the edge count).
        max_deg: largest degree.
        avg_deg: s1 / n.
        edge_deg_min, edge_deg_max: extremes of d_i + d_j - 2 over edges,
            ``None`` for edgeless graphs.

    Everything except ``avg2`` and ``avg_deg`` is an exact integer.
    """

    d: tuple[int, ...]
    d_pos: tuple[int, ...]
    d_neg: tuple[int, ...]
    d_net: tuple[int, ...]
    avg2: tuple[float | None, ...]
    s1: int
    s2: int
    s3: int
    max_deg: int
    avg_deg: float
    edge_deg_min: int | None
    edge_deg_max: int | None


@dataclass(frozen=True)
class TriangleStats:
    """Triangle counts split by sign (sign of a triangle = product of its edges)."""

    t: int
    t_pos: int
    t_neg: int
    t_net: int


def degree_profile(g: SignedGraph) -> DegreeProfile:
    """Compute all per-vertex and aggregate degree statistics of ``g``."""
    nbrs = g.neighbor_map()
    d, d_pos, d_neg, avg2 = [], [], [], []
    for v in range(1, g.n + 1):
        inc = nbrs[v]
        pos = sum(1 for _, s in inc if s > 0)
        d.append(len(inc))
        d_pos.append(pos)
        d_neg.append(len(inc) - pos)
    for v in range(1, g.n + 1):
        if d[v - 1] == 0:
            avg2.append(None)
        else:
            avg2.append(sum(d[u - 1] for u, _ in nbrs[v]) / d[v - 1])
    s1 = sum(d)
    s2 = sum(x * x for x in d)
    s3 = sum(x ** 3 for x in d)
    edge_degs = [d[e.i - 1] + d[e.j - 1] - 2 for e in g.edges]
    return DegreeProfile(
        d=tuple(d),
        d_pos=tuple(d_pos),
        d_neg=tuple(d_neg),
        d_net=tuple(p - q for p, q in zip(d_pos, d_neg)),
        avg2=tuple(avg2),
        s1=s1,
        s2=s2,
        s3=s3,
        max_deg=max(d),
        avg_deg=s1 / g.n,
        edge_deg_min=min(edge_degs) if edge_degs else None,
        edge_deg_max=max(edge_degs) if edge_degs else None,
    )


def triangle_stats(g: SignedGraph) -> TriangleStats:
    """Count triangles and their signs by neighbor-list intersection.

    Walks each edge (i, j) with i < j and merges the sorted adjacency lists
    of both endpoints, keeping common neighbors k > j so every triangle is
    counted exactly once.  Runs in O(sum over edges of deg(i) + deg(j)).
    """
    nbrs = g.neighbor_map()
    adj = {v: [u for u, _ in nbrs[v]] for v in nbrs}
    sign_of = {(e.i, e.j): e.sign for e in g.edges}
    t_pos = t_neg = 0
    for e in g.sorted_edges():
        ai, aj = adj[e.i], adj[e.j]
        x = y = 0
        while x < len(ai) and y < len(aj):
            u, w = ai[x], aj[y]
            if u < w:
                x += 1
            elif w < u:
                y += 1
            else:
                if u > e.j:
                    s = e.sign * sign_of[(e.i, u)] * sign_of[(e.j, u)]
                    if s > 0:
                        t_pos += 1
                    else:
                        t_neg += 1
                x += 1
                y += 1
    return TriangleStats(t=t_pos + t_neg, t_pos=t_pos, t_neg=t_neg, t_net=t_pos - t_neg)


def parse_signed_graph(text: str) -> SignedGraph:
    """Parse the edge-list text format into a :class:`SignedGraph`.

    Format: an optional first line ``n <count>``; one edge per line as
    ``<i> <j> <sign>`` with sign one of ``+``, ``-``, ``+1``, ``-1``;
    ``#`` starts a comment; blank lines are ignored; LF or CRLF endings.
    Without a header the vertex count is the largest index seen.

    Raises:
        GraphFormatError: malformed line, duplicate edge, self-loop, index
            out of range, or missing sign token, with the line number.
    """
    header_n: int | None = None
    saw_content = False
    edges: list[SignedEdge] = []
    pair_lines: dict[tuple[int, int], int] = {}
    max_index = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if not saw_content and tokens[0] == "n":
            saw_content = True
            if len(tokens) != 2:
                raise GraphFormatError(line_no, "malformed header, expected 'n <count>'")
            try:
                header_n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(line_no, f"invalid vertex count {tokens[1]!r}") from None
            if header_n < 1:
                raise GraphFormatError(line_no, "vertex count must be positive")
            continue
        saw_content = True
        if len(tokens) == 2:
            raise GraphFormatError(line_no, "missing sign token")
        if len(tokens) != 3:
            raise GraphFormatError(line_no, f"expected '<i> <j> <sign>', got {len(tokens)} fields")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(line_no, "vertex indices must be integers") from None
        sign = _SIGN_TOKENS.get(tokens[2])
        if sign is None:
            raise GraphFormatError(line_no, f"invalid sign token {tokens[2]!r}")
        if i == j:
            raise GraphFormatError(line_no, f"self-loop at vertex {i}")
        if i < 1 or j < 1:
            raise GraphFormatError(line_no, "vertex indices start at 1")
        if header_n is not None and max(i, j) > header_n:
            raise GraphFormatError(
                line_no, f"vertex index {max(i, j)} exceeds declared count {header_n}"
            )
        pair = (min(i, j), max(i, j))
        if pair in pair_lines:
            raise GraphFormatError(
                line_no,
                f"duplicate edge {pair[0]} {pair[1]} (first on line {pair_lines[pair]})",
            )
        pair_lines[pair] = line_no
        max_index = max(max_index, i, j)
        edges.append(SignedEdge(pair[0], pair[1], sign))
    if header_n is None:
        if not edges:
            raise GraphFormatError(1, "empty input: need a header line or at least one edge")
        header_n = max_index
    return SignedGraph(header_n, frozenset(edges))


def serialize_signed_graph(g: SignedGraph) -> str:
    """Render ``g`` in the edge-list format; round-trips through the parser."""
    lines = [f"n {g.n}"]
    for e in g.sorted_edges():
        lines.append(f"{e.i} {e.j} {'+' if e.sign > 0 else '-'}")
    return "\n".join(lines) + "\n"
