"""Single-source shortest paths.

`sssp` is the contract implementation: exact integer Dijkstra with
deterministic tie-breaking (ties among equal-length paths resolved toward
the smallest predecessor id, so shortest-path trees are reproducible).

`distance_matrix` is the bulk variant used by oracle construction; it is
backed by scipy's C implementation and is equality-tested against `sssp`.
"""

from __future__ import annotations

import heapq

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra as _csgraph_dijkstra

from .graphs import INF, LabeledGraph


def sssp(
    g: LabeledGraph,
    sources,
    within=None,
    reverse: bool = False,
):
    """Exact Dijkstra from a vertex or a set of vertices.

    within: optional vertex collection; the search is restricted to the
    induced subgraph. reverse=True computes into-source distances in
    directed graphs (no-op for undirected ones).
    """
    from .graphs import DistanceMap

    if isinstance(sources, int):
        src = (sources,)
    else:
        src = tuple(sources)
    if not src:
        raise ValueError("empty source set")
    allowed = None if within is None else set(within)
    if allowed is not None:
        for s in src:
            if s not in allowed:
                raise ValueError(f"source {s} outside subgraph restriction")
    adj = g.in_adjacency() if reverse else g.adjacency()
    dist: list = [INF] * g.n
    parent = [-1] * g.n
    source_set = set(src)
    heap: list[tuple[int, int]] = []
    for s in src:
        dist[s] = 0
        heapq.heappush(heap, (0, s))
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w, _ in adj[u]:
            if allowed is not None and v not in allowed:
                continue
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                parent[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and v not in source_set and (
                parent[v] == -1 or u < parent[v]
            ):
                # Equal-length path: keep the smallest predecessor id.
                parent[v] = u
    return DistanceMap(sources=src, dist=dist, parent=parent, reverse=reverse)


def bellman_ford(g: LabeledGraph, source: int, reverse: bool = False):
    """Independent O(nm) reference used by tests to cross-check sssp."""
    adj = g.in_adjacency() if reverse else g.adjacency()
    dist: list = [INF] * g.n
    dist[source] = 0
    for _ in range(g.n - 1):
        changed = False
        for u in range(g.n):
            du = dist[u]
            if du is INF:
                continue
            for v, w, _ in adj[u]:
                if du + w < dist[v]:
                    dist[v] = du + w
                    changed = True
        if not changed:
            break
    return dist


class CSRGraph:
    """Frozen scipy view of a vertex-induced subgraph for bulk Dijkstra.

    Vertices are re-indexed 0..k-1 in the order given; `local` maps global
    vertex ids to local indices.
    """

    def __init__(self, g: LabeledGraph, vertices, include_roles=(0, 1)):
        self.vertices = list(vertices)
        self.local = {v: i for i, v in enumerate(self.vertices)}
        k = len(self.vertices)
        rows, cols, data = [], [], []
        for e in g.edges:
            if e.role not in include_roles:
                continue
            iu = self.local.get(e.u)
            iv = self.local.get(e.v)
            if iu is None or iv is None:
                continue
            rows.append(iu)
            cols.append(iv)
            data.append(e.length)
            if not g.directed:
                rows.append(iv)
                cols.append(iu)
                data.append(e.length)
        self.matrix = csr_matrix(
            (np.asarray(data, dtype=np.float64), (rows, cols)), shape=(k, k)
        )
        self.directed = g.directed

    def distances_from(self, sources, reverse: bool = False) -> np.ndarray:
        """Row i = exact distances from sources[i] (local float64 ndarray;
        finite entries are exact integers, np.inf marks unreachable)."""
        idx = np.asarray([self.local[s] for s in sources], dtype=np.int64)
        if idx.size == 0:
            return np.empty((0, len(self.vertices)))
        mat = self.matrix.T if reverse else self.matrix
        out = _csgraph_dijkstra(mat, directed=self.directed, indices=idx)
        return np.atleast_2d(out)

    def multi_source(self, sources, reverse: bool = False) -> np.ndarray:
        """min over sources of distances_from, as one vector."""
        rows = self.distances_from(sources, reverse=reverse)
        if rows.shape[0] == 0:
            return np.full(len(self.vertices), np.inf)
        return rows.min(axis=0)


def distance_matrix(g: LabeledGraph, vertices=None, include_roles=(0, 1)):
    """All-pairs distances over an induced subgraph (CSRGraph, ndarray)."""
    view = CSRGraph(g, range(g.n) if vertices is None else vertices, include_roles)
    dist = _csgraph_dijkstra(view.matrix, directed=view.directed)
    return view, dist
