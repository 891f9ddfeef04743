"""Predicted center-set families per graph class, checked against enumeration.

Each characterization either materializes the closed-form family (block
graphs, complete bipartite, complete-minus-edge, wheels) or filters the
powerset through a membership rule (odd cycles, symmetric even graphs).
`verify_class` compares the prediction with the brute-force enumeration and
reports the symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import (
    is_block_graph,
    is_boundary,
    is_dominating,
    is_symmetric_even,
    profile_eccentric_image,
)
from .errors import BadParamsError, NotBlockGraphError, NotSymmetricEvenError, NotDominatingError
from .graph import Graph, block_decomposition, check_vertex_set, closed_neighborhood
from .profiles import (
    DEFAULT_MAX_N,
    CenterSetFamily,
    check_profile,
    enumerate_center_sets,
    profile_center,
)

CLASS_TAGS = (
    "block-graph",
    "complete",
    "tree",
    "complete-bipartite",
    "complete-minus-edge",
    "wheel",
    "odd-cycle",
    "even-cycle",
    "symmetric-even",
)


@dataclass(frozen=True)
class ClassSpec:
    """A graph-class tag plus the numeric parameters the class needs.

    `n` is a vertex count (for cycles too), except for complete-bipartite
    where `m` and `n` are the two part sizes.
    """

    tag: str
    n: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.tag not in CLASS_TAGS:
            raise BadParamsError(f"unknown class tag {self.tag!r}")
        for name, value in (("n", self.n), ("m", self.m)):
            if value is not None and value < 1:
                raise BadParamsError(f"{name} must be positive, got {value}")


# ---------------------------------------------------------------------------
# shape discovery


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _bipartition(g: Graph):
    """Return the two color classes if g is complete bipartite, else None."""
    color = [-1] * g.n
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    x = tuple(v for v in range(g.n) if color[v] == 0)
    y = tuple(v for v in range(g.n) if color[v] == 1)
    if g.m != len(x) * len(y):  # bipartite but not complete across the parts
        return None
    return x, y


def _missing_pairs(g: Graph) -> list[tuple[int, int]]:
    dist = g.dist
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u][v] != 1
    ]


def _wheel_parts(g: Graph):
    """Return (hub, rim) for a wheel on >= 5 vertices, else raise."""
    n = g.n
    if n < 5:
        raise BadParamsError("wheel characterization needs >= 5 vertices")
    hubs = [v for v in range(n) if len(g.adj[v]) == n - 1]
    if len(hubs) != 1:
        raise BadParamsError("graph is not a wheel (no unique universal vertex)")
    hub = hubs[0]
    rim = [v for v in range(n) if v != hub]
    for v in rim:
        if len(g.adj[v]) != 3:
            raise BadParamsError("graph is not a wheel (rim vertex of wrong degree)")
    # rim is 2-regular; connectedness of g makes a single rim cycle certain
    return hub, rim


def _cycle_order(g: Graph) -> list[int]:
    """Vertices of a cycle graph in traversal order starting at 0."""
    if g.n < 3 or any(len(a) != 2 for a in g.adj):
        raise BadParamsError("graph is not a cycle")
    order = [0, g.adj[0][0]]
    while len(order) < g.n:
        a, b = g.adj[order[-1]]
        order.append(b if a == order[-2] else a)
    return order


# ---------------------------------------------------------------------------
# materialized families


def _singletons(n: int):
    return [(v,) for v in range(n)]


def predicted_block_graph(g: Graph) -> CenterSetFamily:
    """Family for block graphs: every singleton plus every block's vertex set."""
    if not is_block_graph(g):
        raise NotBlockGraphError("graph has a non-clique block")
    sets = _singletons(g.n)
    sets.extend(block_decomposition(g).blocks)
    return CenterSetFamily(sets)


def _tree_family(g: Graph) -> CenterSetFamily:
    sets = _singletons(g.n)
    sets.extend(g.edges)
    return CenterSetFamily(sets)


def _bipartite_family(x, y) -> CenterSetFamily:
    sets = [tuple(sorted(x + y)), tuple(sorted(x)), tuple(sorted(y))]
    sets.extend((v,) for v in x + y)
    sets.extend((a, b) for a in x for b in y)
    return CenterSetFamily(sets)


def predicted_complete_bipartite(m: int, n: int) -> CenterSetFamily:
    """Family for K_{m,n} with parts {0..m-1} and {m..m+n-1}: the whole vertex
    set, both parts, every singleton, and every cross pair."""
    if m < 2 or n < 2:
        raise BadParamsError("both parts must have size >= 2 (smaller is a tree)")
    return _bipartite_family(tuple(range(m)), tuple(range(m, m + n)))


def _complete_minus_edge_family(n: int, x: int, y: int) -> CenterSetFamily:
    everyone = range(n)
    sets = _singletons(n)
    sets.append(tuple(v for v in everyone if v != x))
    sets.append(tuple(v for v in everyone if v != y))
    sets.append(tuple(v for v in everyone if v not in (x, y)))
    sets.append(tuple(everyone))
    return CenterSetFamily(sets)


def predicted_complete_minus_edge(n: int) -> CenterSetFamily:
    """Family for K_n minus the edge between the last two vertices (n >= 4):
    singletons, the complements of {x}, {y}, {x,y}, and the whole set."""
    if n < 4:
        raise BadParamsError("need n >= 4 (K_3 minus an edge is a path: use the tree family)")
    return _complete_minus_edge_family(n, n - 2, n - 1)


def _wheel_family(g: Graph, hub: int, rim) -> CenterSetFamily:
    rim_adj = {v: [w for w in g.adj[v] if w != hub] for v in rim}
    sets = _singletons(g.n)
    for v in rim:
        sets.append(tuple(sorted((v, hub))))
    for v in rim:
        for w in rim_adj[v]:
            if v < w:
                sets.append(tuple(sorted((v, w, hub))))
    for v in rim:
        a, b = rim_adj[v]
        sets.append(tuple(sorted((a, v, b, hub))))
    if len(rim) == 4:
        # square rim: both diagonal pairs plus the hub are also centers
        for v in rim:
            opp = next(w for w in rim if w != v and w not in rim_adj[v])
            sets.append(tuple(sorted((v, opp, hub))))
    return CenterSetFamily(sets)


def predicted_wheel(n: int) -> CenterSetFamily:
    """Family for the wheel on n >= 5 vertices (rim 0..n-2 in cycle order, hub n-1)."""
    if n < 5:
        raise BadParamsError("wheel family needs n >= 5 (the 4-vertex wheel is complete)")
    hub = n - 1
    rim = list(range(n - 1))
    sets = _singletons(n)
    for v in rim:
        sets.append(tuple(sorted((v, hub))))
    for v in rim:
        w = (v + 1) % (n - 1)
        sets.append(tuple(sorted((v, w, hub))))
    for v in rim:
        a = (v - 1) % (n - 1)
        b = (v + 1) % (n - 1)
        sets.append(tuple(sorted((a, v, b, hub))))
    if n == 5:
        sets.append((0, 2, hub))
        sets.append((1, 3, hub))
    return CenterSetFamily(sets)


# ---------------------------------------------------------------------------
# membership predicates


def odd_cycle_is_center_set(n: int, a) -> bool:
    """Membership rule for odd cycles on n >= 5 vertices labeled 0..n-1 in
    cycle order: the whole set, or any set avoiding vertex pairs two apart."""
    if n < 5 or n % 2 == 0:
        raise BadParamsError(f"need an odd cycle length >= 5, got {n}")
    members = frozenset(a)
    if not members:
        raise BadParamsError("candidate set must be nonempty")
    for v in members:
        if not (isinstance(v, int) and 0 <= v < n):
            raise BadParamsError(f"vertex {v!r} out of range for n={n}")
    if len(members) == n:
        return True
    return all((v + 2) % n not in members for v in members)


def symmetric_even_is_center_set(g: Graph, a) -> bool:
    """Membership rule for symmetric even graphs: the whole set, or any set
    that contains no vertex together with its entire neighborhood."""
    if not is_symmetric_even(g):
        raise NotSymmetricEvenError("graph is not symmetric even")
    members = check_vertex_set(g, a)
    if not members:
        raise BadParamsError("candidate set must be nonempty")
    if len(members) == g.n:
        return True
    return not any(
        all(w in members for w in closed_neighborhood(g, x)) for x in range(g.n)
    )


def dominating_profile_center(g: Graph, s) -> tuple[int, ...]:
    """Center of a dominating profile in a symmetric even graph, computed as
    the antipode image of the profile's complement.

    The full vertex set is a documented special case: its complement is empty
    and the center of the full profile in a self-centered graph is V itself.
    """
    if not is_symmetric_even(g):
        raise NotSymmetricEvenError("graph is not symmetric even")
    members = check_profile(g, s)
    if not is_dominating(g, members):
        raise NotDominatingError("profile is not a dominating set")
    if len(members) == g.n:
        return tuple(range(g.n))
    image = profile_eccentric_image(g, frozenset(range(g.n)) - members)
    assert image == profile_center(g, members)
    return image


@dataclass(frozen=True)
class DualityReport:
    """Duality facts for one profile of a symmetric even graph.

    "DB" means dominating and boundary at once. For any profile, membership
    in DB transfers to its center and back; for DB members the center of the
    center returns the original profile.
    """

    profile: tuple[int, ...]
    profile_in_db: bool
    center: tuple[int, ...]
    center_in_db: bool
    round_trip_ok: bool


def db_duality_check(g: Graph, s) -> DualityReport:
    if not is_symmetric_even(g):
        raise NotSymmetricEvenError("graph is not symmetric even")
    members = check_profile(g, s)
    profile = tuple(sorted(members))
    in_db = is_dominating(g, members) and is_boundary(g, members)
    ctr = profile_center(g, members)
    ctr_in_db = is_dominating(g, ctr) and is_boundary(g, ctr)
    round_trip = profile_center(g, ctr) == profile
    assert in_db == ctr_in_db
    if in_db:
        assert round_trip
    return DualityReport(profile, in_db, ctr, ctr_in_db, round_trip)


# ---------------------------------------------------------------------------
# verification against the enumeration oracle


def _filtered_family(g: Graph, keep) -> CenterSetFamily:
    """All nonempty vertex subsets passing `keep`, plus the full set."""
    n = g.n
    sets = [tuple(range(n))]
    for size in range(1, n):
        for combo in combinations(range(n), size):
            if keep(combo):
                sets.append(combo)
    return CenterSetFamily(sets)


def _symmetric_even_family(g: Graph) -> CenterSetFamily:
    closed = [frozenset(closed_neighborhood(g, x)) for x in range(g.n)]

    def keep(combo):
        members = frozenset(combo)
        return not any(c <= members for c in closed)

    return _filtered_family(g, keep)


def _odd_cycle_family(g: Graph) -> CenterSetFamily:
    order = _cycle_order(g)
    pos = {v: i for i, v in enumerate(order)}
    n = g.n

    def keep(combo):
        spots = {pos[v] for v in combo}
        return all((i + 2) % n not in spots for i in spots)

    return _filtered_family(g, keep)


def predicted_family(g: Graph, spec: ClassSpec) -> CenterSetFamily:
    """Dispatch to the class characterization, validating the graph's shape.

    Degenerate parameters fall back to the subsuming class: a one-sided
    complete bipartite graph and K_3 minus an edge are trees, the 4-vertex
    wheel and the 3-cycle are complete.
    """
    tag = spec.tag
    if tag != "complete-bipartite" and spec.n is not None and spec.n != g.n:
        raise BadParamsError(f"graph has {g.n} vertices, spec says {spec.n}")
    if tag == "block-graph":
        return predicted_block_graph(g)
    if tag == "complete":
        if not _is_complete(g):
            raise BadParamsError("graph is not complete")
        return CenterSetFamily(_singletons(g.n) + [tuple(range(g.n))])
    if tag == "tree":
        if g.m != g.n - 1:
            raise BadParamsError("graph is not a tree")
        return _tree_family(g)
    if tag == "complete-bipartite":
        parts = _bipartition(g)
        if parts is None:
            raise BadParamsError("graph is not complete bipartite")
        x, y = parts
        if (spec.m is not None and spec.n is not None
                and {spec.m, spec.n} != {len(x), len(y)}):
            raise BadParamsError("part sizes do not match the spec parameters")
        if min(len(x), len(y)) <= 1:
            return _tree_family(g)
        return _bipartite_family(x, y)
    if tag == "complete-minus-edge":
        missing = _missing_pairs(g)
        if len(missing) != 1:
            raise BadParamsError("graph is not a complete graph minus one edge")
        if g.n == 3:
            return _tree_family(g)
        x, y = missing[0]
        return _complete_minus_edge_family(g.n, x, y)
    if tag == "wheel":
        if g.n == 4 and _is_complete(g):
            return CenterSetFamily(_singletons(4) + [(0, 1, 2, 3)])
        hub, rim = _wheel_parts(g)
        return _wheel_family(g, hub, rim)
    if tag == "odd-cycle":
        _cycle_order(g)
        if g.n % 2 == 0:
            raise BadParamsError(f"cycle length {g.n} is even")
        if g.n == 3:
            return CenterSetFamily(_singletons(3) + [(0, 1, 2)])
        return _odd_cycle_family(g)
    if tag == "even-cycle":
        _cycle_order(g)
        if g.n % 2 == 1:
            raise BadParamsError(f"cycle length {g.n} is odd")
        return _symmetric_even_family(g)
    if tag == "symmetric-even":
        if not is_symmetric_even(g):
            raise NotSymmetricEvenError("graph is not symmetric even")
        return _symmetric_even_family(g)
    raise BadParamsError(f"unknown class tag {tag!r}")


def compare_families(predicted: CenterSetFamily, enumerated: CenterSetFamily):
    """Symmetric difference as (missing from enumeration, unexpected in it)."""
    missing = tuple(s for s in predicted if s not in enumerated)
    unexpected = tuple(s for s in enumerated if s not in predicted)
    return missing, unexpected


@dataclass(frozen=True)
class VerificationReport:
    tag: str
    n: int
    predicted_count: int
    enumerated_count: int
    missing: tuple[tuple[int, ...], ...]
    unexpected: tuple[tuple[int, ...], ...]

    @property
    def passed(self) -> bool:
        return not self.missing and not self.unexpected


def verify_class(g: Graph, spec: ClassSpec, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Compare the class characterization with brute-force enumeration."""
    predicted = predicted_family(g, spec)
    enumerated = enumerate_center_sets(g, max_n)
    missing, unexpected = compare_families(predicted, enumerated)
    return VerificationReport(
        tag=spec.tag,
        n=g.n,
        predicted_count=predicted.count,
        enumerated_count=enumerated.count,
        missing=missing,
        unexpected=unexpected,
    )
