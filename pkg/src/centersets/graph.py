"""Graph type, BFS distances, eccentricity machinery, and block decomposition.

Vertices are the contiguous integers 0..n-1 throughout; anything 1-based is a
display concern handled by the CLI.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import BadParamsError, DisconnectedError, InvalidEdgeError

Edge = tuple[int, int]
DistanceMatrix = tuple[tuple[int, ...], ...]


class Graph:
    """Simple undirected connected graph on vertices 0..n-1.

    Immutable once constructed. The constructor rejects loops, duplicate
    edges, out-of-range endpoints, and disconnected input. The all-pairs
    distance matrix is computed once on first use and then shared by every
    operation (safe to read from multiple threads; recomputing it would be
    idempotent).
    """

    __slots__ = ("n", "edges", "adj", "_dist")

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise BadParamsError(f"vertex count must be positive, got {n}")
        seen: set[Edge] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidEdgeError(f"edge {tuple(e)!r} out of range for n={n}")
            if u == v:
                raise InvalidEdgeError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidEdgeError(f"duplicate edge {key!r}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(seen))
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._dist = None
        if -1 in self._bfs_row(0):
            raise DisconnectedError("graph is not connected")

    def _bfs_row(self, src: int) -> list[int]:
        dist = [-1] * self.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        return dist

    @property
    def dist(self) -> DistanceMatrix:
        """All-pairs hop distances, computed once per graph."""
        if self._dist is None:
            self._dist = tuple(tuple(self._bfs_row(v)) for v in range(self.n))
        return self._dist

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[check_vertex(self, v)])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex(g: Graph, v: int) -> int:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise BadParamsError(f"vertex {v!r} out of range for n={g.n}")
    return v


def check_vertex_set(g: Graph, vs) -> frozenset[int]:
    """Normalize an iterable of vertices to a validated frozenset (may be empty)."""
    out = frozenset(vs)
    for v in out:
        check_vertex(g, v)
    return out


def distances(g: Graph) -> DistanceMatrix:
    return g.dist


def eccentricity(g: Graph, v: int) -> int:
    """max distance from v to any vertex."""
    return max(g.dist[check_vertex(g, v)])


def radius(g: Graph) -> int:
    return min(max(row) for row in g.dist)


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.dist)


def center(g: Graph) -> tuple[int, ...]:
    """Vertices of minimum eccentricity, sorted."""
    eccs = [max(row) for row in g.dist]
    rad = min(eccs)
    return tuple(v for v, e in enumerate(eccs) if e == rad)


def eccentric_vertices(g: Graph, v: int) -> tuple[int, ...]:
    """Vertices at maximum distance from v, sorted."""
    row = g.dist[check_vertex(g, v)]
    e = max(row)
    return tuple(u for u, d in enumerate(row) if d == e)


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    return tuple(sorted((*g.adj[check_vertex(g, v)], v)))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal subgraphs without a cut vertex) and the cut vertices.

    Each block is a sorted vertex tuple; a bridge gives a 2-vertex block and
    the single-vertex graph gives the one block (0,). The blocks partition
    the edge set.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Decompose into biconnected components via iterative lowpoint DFS."""
    n = g.n
    if n == 1:
        return BlockDecomposition(blocks=((0,),), cut_vertices=())
    adj = g.adj
    disc = [0] * n  # 1-based discovery time, 0 = unvisited
    low = [0] * n
    timer = 1
    disc[0] = low[0] = timer
    edge_stack: list[Edge] = []
    raw_blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    root_children = 0
    stack = [(0, -1, iter(adj[0]))]
    while stack:
        v, parent, nbrs = stack[-1]
        descended = False
        for w in nbrs:
            if disc[w] == 0:
                timer += 1
                disc[w] = low[w] = timer
                edge_stack.append((v, w))
                stack.append((w, v, iter(adj[w])))
                if v == 0:
                    root_children += 1
                descended = True
                break
            if w != parent and disc[w] < disc[v]:
                # back edge, recorded once from the deeper endpoint
                edge_stack.append((v, w))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if descended:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        if low[v] < low[p]:
            low[p] = low[v]
        if low[v] >= disc[p]:
            verts: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                verts.add(a)
                verts.add(b)
                if (a, b) == (p, v):
                    break
            raw_blocks.append(tuple(sorted(verts)))
            # the root separates only when it has two or more DFS children
            if p != 0 or root_children > 1:
                cuts.add(p)
    return BlockDecomposition(blocks=tuple(sorted(raw_blocks)),
                              cut_vertices=tuple(sorted(cuts)))


def parse_edge_list(text: str) -> Graph:
    """Build a graph from the edge-list text format.

    First meaningful line is "n m", followed by m lines "u v" with 0-indexed
    endpoints. Blank lines and text after '#' are ignored.
    """
    rows: list[list[str]] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            rows.append(body.split())
    if not rows:
        raise BadParamsError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise BadParamsError(f"expected header 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise BadParamsError(f"non-integer header {' '.join(header)!r}") from None
    body_rows = rows[1:]
    if len(body_rows) != m:
        raise BadParamsError(f"header promises {m} edges, found {len(body_rows)}")
    edges = []
    for row in body_rows:
        if len(row) != 2:
            raise InvalidEdgeError(f"expected 'u v', got {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise InvalidEdgeError(f"non-integer edge {' '.join(row)!r}") from None
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
