"""Deterministic constructors for the graph families used across the package.

Seeded generators use `random.Random`, i.e. the MT19937 Mersenne Twister, so
the same (parameters, seed) pair reproduces the same graph on any platform.
"""

from __future__ import annotations

import heapq
import random
from functools import cache
from itertools import combinations

from .errors import BadParamsError, DisconnectedError, GenerationFailedError
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParamsError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParamsError("complete needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """Parts {0..m-1} and {m..m+n-1}, every cross pair an edge."""
    if m < 1 or n < 1:
        raise BadParamsError("complete_bipartite needs m, n >= 1")
    return Graph(m + n, [(a, b) for a in range(m) for b in range(m, m + n)])


def star(n: int) -> Graph:
    """Hub 0 joined to n-1 leaves."""
    if n < 2:
        raise BadParamsError("star needs n >= 2")
    return complete_bipartite(1, n - 1)


def wheel(n: int) -> Graph:
    """Rim cycle 0..n-2 plus the hub n-1 joined to every rim vertex."""
    if n < 4:
        raise BadParamsError("wheel needs n >= 4")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges.extend((i, rim) for i in range(rim))
    return Graph(n, edges)


def complete_minus_edge(n: int) -> Graph:
    """K_n without the edge between the last two vertices."""
    if n < 3:
        raise BadParamsError("complete_minus_edge needs n >= 3")
    return Graph(n, [e for e in combinations(range(n), 2) if e != (n - 2, n - 1)])


def hypercube(d: int) -> Graph:
    """Vertices are the d-bit labels 0..2^d-1; edges join labels one bit apart."""
    if d < 1:
        raise BadParamsError("hypercube needs dimension >= 1")
    n = 1 << d
    edges = [
        (v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)
    ]
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree via a random sequence decoded Prüfer-style."""
    if n < 1:
        raise BadParamsError("random_tree needs n >= 1")
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def random_block_graph(blocks: int, max_block: int, seed: int) -> Graph:
    """Random cliques of size 2..max_block glued tree-fashion at shared vertices."""
    if blocks < 1 or max_block < 2:
        raise BadParamsError("need blocks >= 1 and max_block >= 2")
    rng = random.Random(seed)
    sizes = [rng.randint(2, max_block) for _ in range(blocks)]
    edges = list(combinations(range(sizes[0]), 2))
    count = sizes[0]
    for size in sizes[1:]:
        anchor = rng.randrange(count)
        verts = [anchor, *range(count, count + size - 1)]
        edges.extend(combinations(verts, 2))
        count += size - 1
    return Graph(count, edges)


def random_connected(n: int, edge_prob: float, seed: int, max_attempts: int = 1000) -> Graph:
    """Sample each pair independently with probability edge_prob until connected."""
    if n < 1:
        raise BadParamsError("random_connected needs n >= 1")
    if not 0 <= edge_prob <= 1:
        raise BadParamsError(f"edge probability {edge_prob} outside [0, 1]")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        edges = [e for e in combinations(range(n), 2) if rng.random() < edge_prob]
        try:
            return Graph(n, edges)
        except DisconnectedError:
            continue
    raise GenerationFailedError(
        f"no connected sample in {max_attempts} attempts (n={n}, p={edge_prob})"
    )


@cache
def desk_corpus() -> tuple[tuple[str, Graph], ...]:
    """The fixed labeled corpus the test-suite invariants run over.

    Cycles 3..10, paths 2..10, complete graphs 2..8, complete bipartite up to
    5+5, wheels on 5..9 vertices, hypercubes of dimension 1..3, complete
    graphs minus an edge on 4..8 vertices, five seeded random trees, and five
    seeded random block graphs. Every graph has at most 12 vertices, so the
    exhaustive profile checks stay cheap.
    """
    entries: list[tuple[str, Graph]] = []
    entries.extend((f"cycle-{n}", cycle(n)) for n in range(3, 11))
    entries.extend((f"path-{n}", path(n)) for n in range(2, 11))
    entries.extend((f"complete-{n}", complete(n)) for n in range(2, 9))
    entries.extend(
        (f"bipartite-{m}-{n}", complete_bipartite(m, n))
        for m in range(1, 6)
        for n in range(m, 6)
    )
    entries.extend((f"wheel-{n}", wheel(n)) for n in range(5, 10))
    entries.extend((f"cube-{d}", hypercube(d)) for d in range(1, 4))
    entries.extend(
        (f"complete-minus-edge-{n}", complete_minus_edge(n)) for n in range(4, 9)
    )
    entries.extend(
        (f"random-tree-{n}-seed{seed}", random_tree(n, seed))
        for n, seed in ((5, 11), (6, 12), (7, 13), (8, 14), (9, 15))
    )
    entries.extend(
        (f"random-blocks-{b}x{mb}-seed{seed}", random_block_graph(b, mb, seed))
        for b, mb, seed in ((1, 5, 21), (2, 4, 22), (3, 3, 23), (4, 3, 24), (5, 2, 25))
    )
    return tuple(entries)
