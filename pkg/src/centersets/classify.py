"""Structural predicates: self-centered, unique-eccentric-vertex, center-critical,
even/balanced/harmonic/symmetric-even, block graph, and dominating/boundary sets."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotUEVError
from .graph import (
    Graph,
    block_decomposition,
    center,
    check_vertex_set,
    diameter,
    eccentric_vertices,
    radius,
)
from .profiles import DEFAULT_MAX_N, _check_cap, _mask_center


def is_self_centered(g: Graph) -> bool:
    """True when every vertex has the same eccentricity (radius = diameter)."""
    return radius(g) == diameter(g)


def unique_eccentric_map(g: Graph) -> dict[int, int]:
    """Partial map v -> its eccentric vertex, defined only where it is unique."""
    bar: dict[int, int] = {}
    for v in range(g.n):
        ecc = eccentric_vertices(g, v)
        if len(ecc) == 1:
            bar[v] = ecc[0]
    return bar


def is_uev(g: Graph) -> bool:
    """True when every vertex has exactly one eccentric vertex."""
    return len(unique_eccentric_map(g)) == g.n


def is_center_critical(g: Graph) -> bool:
    """Predicate form: no proper profile recovers the classical center.

    Equivalent to being self-centered with unique eccentric vertices; the
    brute-force twin below checks the definition directly.
    """
    return is_self_centered(g) and is_uev(g)


def is_center_critical_bruteforce(g: Graph, max_n: int = DEFAULT_MAX_N) -> bool:
    """True iff no proper nonempty profile has the classical center as its center."""
    _check_cap(g, max_n)
    target = center(g)
    rows = g.dist
    full = (1 << g.n) - 1
    for mask in range(1, full):
        if _mask_center(rows, mask) == target:
            return False
    return True


def is_even(g: Graph) -> bool:
    """Every vertex has a unique eccentric vertex at distance exactly the diameter."""
    diam = diameter(g)
    for v in range(g.n):
        ecc = eccentric_vertices(g, v)
        if len(ecc) != 1 or g.dist[v][ecc[0]] != diam:
            return False
    return True


def is_balanced(g: Graph) -> bool:
    """Even, and the antipode map preserves degrees."""
    if not is_even(g):
        return False
    bar = unique_eccentric_map(g)
    return all(len(g.adj[v]) == len(g.adj[bar[v]]) for v in range(g.n))


def is_harmonic(g: Graph) -> bool:
    """Even, and the antipode map sends edges to edges."""
    if not is_even(g):
        return False
    bar = unique_eccentric_map(g)
    dist = g.dist
    return all(dist[bar[u]][bar[v]] == 1 for u, v in g.edges)


def is_symmetric_even(g: Graph) -> bool:
    """Even, and d(u,v) + d(u, antipode(v)) equals the diameter for all pairs."""
    if not is_even(g):
        return False
    bar = unique_eccentric_map(g)
    dist = g.dist
    diam = diameter(g)
    return all(
        dist[u][v] + dist[u][bar[v]] == diam
        for u in range(g.n)
        for v in range(g.n)
    )


def is_block_graph(g: Graph) -> bool:
    """True when every block induces a clique."""
    dist = g.dist
    for block in block_decomposition(g).blocks:
        for i, u in enumerate(block):
            for v in block[i + 1:]:
                if dist[u][v] != 1:
                    return False
    return True


def is_dominating(g: Graph, s) -> bool:
    """Every vertex outside s has a neighbor in s. The empty set dominates nothing."""
    members = check_vertex_set(g, s)
    return all(
        v in members or any(w in members for w in g.adj[v]) for v in range(g.n)
    )


def interior_vertices(g: Graph, s) -> tuple[int, ...]:
    """Members of s whose whole neighborhood lies inside s."""
    members = check_vertex_set(g, s)
    return tuple(
        sorted(v for v in members if all(w in members for w in g.adj[v]))
    )


def is_boundary(g: Graph, s) -> bool:
    """True when s contains no interior vertex (vacuously true for the empty set)."""
    return not interior_vertices(g, s)


def profile_eccentric_image(g: Graph, s) -> tuple[int, ...]:
    """Image of a vertex set under the antipode map; requires unique eccentric vertices."""
    members = check_vertex_set(g, s)
    bar = unique_eccentric_map(g)
    if len(bar) != g.n:
        raise NotUEVError("graph has a vertex without a unique eccentric vertex")
    return tuple(sorted({bar[v] for v in members}))


@dataclass(frozen=True)
class Classification:
    self_centered: bool
    uev: bool
    center_critical: bool
    even: bool
    balanced: bool
    harmonic: bool
    symmetric_even: bool
    block_graph: bool


def classify(g: Graph) -> Classification:
    """Evaluate all structural predicates at once."""
    cls = Classification(
        self_centered=is_self_centered(g),
        uev=is_uev(g),
        center_critical=is_center_critical(g),
        even=is_even(g),
        balanced=is_balanced(g),
        harmonic=is_harmonic(g),
        symmetric_even=is_symmetric_even(g),
        block_graph=is_block_graph(g),
    )
    # theorem-level consistency; a violation would be an implementation bug
    assert not cls.symmetric_even or cls.harmonic
    assert not cls.harmonic or cls.balanced
    assert cls.center_critical == (cls.self_centered and cls.uev)
    return cls
