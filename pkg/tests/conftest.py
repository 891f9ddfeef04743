"""Shared fixtures and independent reference implementations for the suite."""

from __future__ import annotations

import random
from collections import deque

import pytest

from centersets import Graph
from centersets.generators import desk_corpus, random_tree


@pytest.fixture(scope="session")
def corpus():
    return desk_corpus()


def floyd_warshall(g: Graph) -> list[list[int]]:
    """Independent all-pairs distances used to cross-check the BFS matrix."""
    n = g.n
    inf = n + 1
    d = [
        [0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)]
        for i in range(n)
    ]
    for k in range(n):
        dk = d[k]
        for i in range(n):
            di = d[i]
            dik = di[k]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def induced_connected(g: Graph, subset) -> bool:
    members = set(subset)
    if not members:
        return False
    start = next(iter(members))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in members and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == members


def seeded_connected_graph(n: int, seed: int, extra_prob: float) -> Graph:
    """Random tree plus independently sampled extra edges; always connected."""
    rng = random.Random(seed)
    edges = set(random_tree(n, seed).edges)
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra_prob:
                edges.add((u, v))
    return Graph(n, sorted(edges))
