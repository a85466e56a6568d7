"""Embedded planar labeled graphs: the shared substrate for every oracle.

Vertices carry straight-line coordinates (the generators control the
embedding) and a mutable label. Edge lengths are non-negative integers and
all distance arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

INF = float("inf")

# Edge roles.
ORIGINAL = 0
TRIANGULATION = 1


@dataclass
class Edge:
    u: int
    v: int
    length: int
    role: int = ORIGINAL


@dataclass
class LabeledGraph:
    """Planar graph with a straight-line embedding and per-vertex labels.

    In directed mode each Edge is an arc u->v; in undirected mode it is an
    unordered pair stored with u/v in insertion order.
    """

    n: int
    coords: list[tuple[float, float]]
    labels: list[int]
    edges: list[Edge] = field(default_factory=list)
    directed: bool = False

    def add_edge(self, u: int, v: int, length: int, role: int = ORIGINAL) -> int:
        self.edges.append(Edge(u, v, int(length), role))
        return len(self.edges) - 1

    def adjacency(self, include_roles: tuple[int, ...] = (ORIGINAL, TRIANGULATION)):
        """Out-adjacency lists [(neighbor, length, edge_index)].

        Undirected graphs list each edge from both endpoints.
        """
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            if e.role not in include_roles:
                continue
            adj[e.u].append((e.v, e.length, idx))
            if not self.directed:
                adj[e.v].append((e.u, e.length, idx))
        return adj

    def in_adjacency(self, include_roles: tuple[int, ...] = (ORIGINAL, TRIANGULATION)):
        """In-adjacency lists; equals adjacency() for undirected graphs."""
        if not self.directed:
            return self.adjacency(include_roles)
        adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            if e.role not in include_roles:
                continue
            adj[e.v].append((e.u, e.length, idx))
        return adj

    def original_edge_count(self) -> int:
        return sum(1 for e in self.edges if e.role == ORIGINAL)

    def total_original_length(self) -> int:
        return sum(e.length for e in self.edges if e.role == ORIGINAL)

    def infinite_length(self) -> int:
        """Length for triangulation edges: beyond any real shortest path."""
        return 1 + self.total_original_length()

    def length_ratio(self) -> float:
        """Ratio of max to min positive edge length (the scale parameter N)."""
        positive = [e.length for e in self.edges if e.role == ORIGINAL and e.length > 0]
        if not positive:
            return 1.0
        return max(positive) / min(positive)

    def label_set(self) -> set[int]:
        return set(self.labels)

    def copy(self) -> "LabeledGraph":
        g = LabeledGraph(
            n=self.n,
            coords=list(self.coords),
            labels=list(self.labels),
            directed=self.directed,
        )
        g.edges = [Edge(e.u, e.v, e.length, e.role) for e in self.edges]
        return g


@dataclass
class DistanceMap:
    """Result of a shortest-path computation.

    dist[v] is an exact integer distance or INF; parent[v] is the
    predecessor on a shortest-path tree edge (-1 at sources / unreached).
    """

    sources: tuple[int, ...]
    dist: list
    parent: list[int]
    reverse: bool = False

    def __getitem__(self, v: int):
        return self.dist[v]


def _segments_intersect(p1, p2, p3, p4) -> bool:
    """True if open segments p1p2 and p3p4 properly cross."""

    def orient(a, b, c):
        d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if d > 0:
            return 1
        if d < 0:
            return -1
        return 0

    o1 = orient(p1, p2, p3)
    o2 = orient(p1, p2, p4)
    o3 = orient(p3, p4, p1)
    o4 = orient(p3, p4, p2)
    return o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4)


def validate(g: LabeledGraph, check_crossings: bool = True) -> dict:
    """Diagnostic pass: planarity necessary condition, signs, connectivity.

    Returns {"clean": bool, "issues": [str, ...]}; never raises.
    """
    issues: list[str] = []
    m = g.original_edge_count()
    if g.n >= 3 and m > 3 * g.n - 6:
        issues.append(f"edge count {m} exceeds 3n-6={3 * g.n - 6}")
    for e in g.edges:
        if e.length < 0:
            issues.append(f"negative length on edge {e.u}-{e.v}")
        if not (0 <= e.u < g.n and 0 <= e.v < g.n):
            issues.append(f"edge endpoint out of range: {e.u}-{e.v}")
    # Connectivity of the underlying undirected graph over original edges.
    if g.n > 0:
        seen = [False] * g.n
        stack = [0]
        seen[0] = True
        nbr: list[list[int]] = [[] for _ in range(g.n)]
        for e in g.edges:
            if e.role != ORIGINAL:
                continue
            if 0 <= e.u < g.n and 0 <= e.v < g.n:
                nbr[e.u].append(e.v)
                nbr[e.v].append(e.u)
        while stack:
            u = stack.pop()
            for v in nbr[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        if not all(seen):
            issues.append("underlying graph is disconnected")
    if check_crossings and not issues:
        originals = [e for e in g.edges if e.role == ORIGINAL]
        for i in range(len(originals)):
            a = originals[i]
            for b in originals[i + 1 :]:
                if len({a.u, a.v, b.u, b.v}) < 4:
                    continue
                if _segments_intersect(
                    g.coords[a.u], g.coords[a.v], g.coords[b.u], g.coords[b.v]
                ):
                    issues.append(f"crossing edges {a.u}-{a.v} and {b.u}-{b.v}")
                    break
            else:
                continue
            break
    return {"clean": not issues, "issues": issues}


def write_graph_file(g: LabeledGraph, path: str) -> None:
    """Text format: `n m directed`, n vertex lines `id x y label`, m edge
    lines `u v length`. Only original edges are written."""
    lines = []
    originals = [e for e in g.edges if e.role == ORIGINAL]
    lines.append(f"{g.n} {len(originals)} {1 if g.directed else 0}")
    for v in range(g.n):
        x, y = g.coords[v]
        lines.append(f"{v} {x:.9g} {y:.9g} {g.labels[v]}")
    for e in originals:
        lines.append(f"{e.u} {e.v} {e.length}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_graph_file(path: str) -> LabeledGraph:
    with open(path) as fh:
        tokens = fh.read().split("\n")
    rows = [row.split() for row in tokens if row.strip()]
    n, m, directed = int(rows[0][0]), int(rows[0][1]), int(rows[0][2])
    coords: list[tuple[float, float]] = [(0.0, 0.0)] * n
    labels = [0] * n
    for row in rows[1 : 1 + n]:
        v = int(row[0])
        coords[v] = (float(row[1]), float(row[2]))
        labels[v] = int(row[3])
    g = LabeledGraph(n=n, coords=coords, labels=labels, directed=bool(directed))
    for row in rows[1 + n : 1 + n + m]:
        g.add_edge(int(row[0]), int(row[1]), int(row[2]))
    return g
