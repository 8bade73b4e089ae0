"""The annihilating-ideal graph AG(R) and its distances.

Two vertices M, L are adjacent iff ML = 0, i.e. m_k + l_k >= n_k in every
component.  Distances are at most 3 and follow a closed form in the
exponents; a breadth-first search over the adjacency matrix is kept as an
independent check of that closed form.
"""
from __future__ import annotations

import csv
import io
import json
import os
from collections import deque

import numpy as np

from .errors import DomainError, GraphSizeError
from .ring_model import IdealVector, RingSpec, enumerate_vertices, is_vertex

DEFAULT_VERTEX_CAP = 100_000
UNREACHABLE = -1

BRANCH_EQUAL = "equal"
BRANCH_PRODUCT_ZERO = "product-zero"
BRANCH_LEMMA_3 = "lemma-3"
BRANCH_DEFAULT_2 = "default-2"


def vertex_cap() -> int:
    value = os.environ.get("ANNIGRAPH_VERTEX_CAP")
    return int(value) if value else DEFAULT_VERTEX_CAP


def _check_vertex(spec: RingSpec, v: IdealVector) -> None:
    if not is_vertex(spec, v):
        if all(m == 0 for m in v.exps):
            raise DomainError(f"{v} is the whole ring, whose annihilator is zero")
        raise DomainError(f"{v} is the zero ideal")


def adjacent(spec: RingSpec, M: IdealVector, L: IdealVector) -> bool:
    _check_vertex(spec, M)
    _check_vertex(spec, L)
    if M == L:
        return False
    return all(m + l >= n for m, l, n in zip(M.exps, L.exps, spec.orders))


def distance_branch(spec: RingSpec, M: IdealVector, L: IdealVector) -> tuple[int, str]:
    """Closed-form distance together with the name of the case that decided it."""
    if M == L:
        _check_vertex(spec, M)
        return 0, BRANCH_EQUAL
    if adjacent(spec, M, L):
        return 1, BRANCH_PRODUCT_ZERO
    # every factor sees R_s in M or L, and some factor is nonzero in both
    full_cover = all(min(m, l) == 0 for m, l in zip(M.exps, L.exps))
    both_nonzero = any(
        m < n and l < n for m, l, n in zip(M.exps, L.exps, spec.orders)
    )
    if full_cover and both_nonzero:
        return 3, BRANCH_LEMMA_3
    return 2, BRANCH_DEFAULT_2


def distance_closed_form(spec: RingSpec, M: IdealVector, L: IdealVector) -> int:
    return distance_branch(spec, M, L)[0]


def closed_form_matrix(spec: RingSpec, exps: np.ndarray) -> np.ndarray:
    """All-pairs closed-form distances for the exponent rows of ``exps``."""
    V = len(exps)
    adj = _adjacency(spec, exps)
    cover = np.ones((V, V), dtype=bool)
    both_nonzero = np.zeros((V, V), dtype=bool)
    for k, n in enumerate(spec.orders):
        col = exps[:, k]
        cover &= np.minimum.outer(col, col) == 0
        below = col < n
        both_nonzero |= np.logical_and.outer(below, below)
    dist = np.full((V, V), 2, dtype=np.uint8)
    dist[cover & both_nonzero] = 3
    dist[adj] = 1
    np.fill_diagonal(dist, 0)
    return dist


def _adjacency(spec: RingSpec, exps: np.ndarray) -> np.ndarray:
    V = len(exps)
    adj = np.ones((V, V), dtype=bool)
    for k, n in enumerate(spec.orders):
        col = exps[:, k]
        adj &= np.add.outer(col, col) >= n
    np.fill_diagonal(adj, False)
    return adj


class AGGraph:
    """AG(R) with vertices in lexicographic order.

    ``oracle`` selects where the all-pairs distance matrix comes from:
    ``"closed"`` (closed form, default) or ``"bfs"`` (breadth-first search).
    The matrix is filled on first access and is read-only afterwards.
    """

    def __init__(self, spec: RingSpec, oracle: str = "closed"):
        if oracle not in ("closed", "bfs"):
            raise DomainError(f"unknown distance oracle {oracle!r}")
        self.spec = spec
        self.oracle = oracle
        self.vertices: tuple[IdealVector, ...] = tuple(enumerate_vertices(spec))
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.exps = np.array([v.exps for v in self.vertices], dtype=np.int64).reshape(
            len(self.vertices), spec.n
        )
        self.adjacency = _adjacency(spec, self.exps)
        self.adjacency.setflags(write=False)
        self._distances: np.ndarray | None = None
        self._neighbors = [np.flatnonzero(row).tolist() for row in self.adjacency]

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"AGGraph(spec={self.spec}, vertices={len(self)}, edges={self.edge_count})"

    def index_of(self, v: IdealVector) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise DomainError(f"{v} is not a vertex of AG for spec {self.spec}") from None

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return list(zip(us.tolist(), vs.tolist()))

    def neighbors(self, i: int) -> list[int]:
        return self._neighbors[i]

    @property
    def distances(self) -> np.ndarray:
        if self._distances is None:
            if self.oracle == "bfs":
                dist = bfs_matrix(self)
            else:
                dist = closed_form_matrix(self.spec, self.exps)
            dist.setflags(write=False)
            self._distances = dist
        return self._distances

    def distance(self, M: IdealVector, L: IdealVector) -> int:
        return int(self.distances[self.index_of(M), self.index_of(L)])

    def diameter(self) -> int:
        if len(self) == 0:
            return 0
        return int(self.distances.max())


def build(spec: RingSpec, cap: int | None = None, oracle: str = "closed") -> AGGraph:
    cap = vertex_cap() if cap is None else cap
    count = spec.vertex_count()
    if count > cap:
        raise GraphSizeError(count, cap)
    return AGGraph(spec, oracle=oracle)


def _bfs_from(graph: AGGraph, source: int) -> list[int]:
    dist = [UNREACHABLE] * len(graph)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in graph.neighbors(u):
            if dist[w] == UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_bfs(graph: AGGraph, M: IdealVector, L: IdealVector) -> int:
    """Shortest-path length by BFS; ``UNREACHABLE`` (-1) if there is no path."""
    i, j = graph.index_of(M), graph.index_of(L)
    return _bfs_from(graph, i)[j]


def bfs_matrix(graph: AGGraph) -> np.ndarray:
    """All-pairs BFS, expanding every source's frontier one level at a time."""
    V = len(graph)
    A = graph.adjacency.astype(np.float32)
    dist = np.full((V, V), UNREACHABLE, dtype=np.int64)
    frontier = np.eye(V, dtype=bool)
    reached = frontier.copy()
    level = 0
    while frontier.any():
        dist[frontier] = level
        level += 1
        frontier = ((frontier.astype(np.float32) @ A) > 0) & ~reached
        reached |= frontier
    if (dist == UNREACHABLE).any():
        raise DomainError(f"AG for spec {graph.spec} is disconnected")
    return dist.astype(np.uint8)


def closed_neighborhood(graph: AGGraph, v: IdealVector) -> set[IdealVector]:
    i = graph.index_of(v)
    return {v} | {graph.vertices[j] for j in graph.neighbors(i)}


def open_neighborhood(graph: AGGraph, v: IdealVector) -> set[IdealVector]:
    return closed_neighborhood(graph, v) - {v}


def zero_product_set(graph: AGGraph, v: IdealVector) -> set[IdealVector]:
    """Vertices u with uv = 0, including v itself when v^2 = 0."""
    spec = graph.spec
    graph.index_of(v)
    return {
        u for u in graph.vertices
        if all(a + b >= n for a, b, n in zip(u.exps, v.exps, spec.orders))
    }


def export(graph: AGGraph, fmt: str) -> bytes:
    """Serialise the graph as ``dot``, ``csv`` (header-less ``u,v``) or ``json``."""
    labels = [str(v) for v in graph.vertices]
    edges = graph.edges()
    if fmt == "dot":
        lines = [f'graph "AG({graph.spec})" {{']
        lines += [f'  {i} [label="{label}"];' for i, label in enumerate(labels)]
        lines += [f"  {u} -- {v};" for u, v in edges]
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(edges)
        return buf.getvalue().encode()
    if fmt == "json":
        doc = {
            "spec": list(graph.spec.orders),
            "vertices": [list(v.exps) for v in graph.vertices],
            "edges": [list(e) for e in edges],
        }
        return (json.dumps(doc) + "\n").encode()
    raise DomainError(f"unknown export format {fmt!r}")
