"""Profile eccentricity, profile centers, and exhaustive center-set enumeration.

A profile is a nonempty vertex subset (the demand set of a facility-location
query). The center of a profile is the set of vertices minimizing the maximum
distance to the profile; a vertex set that arises as the center of at least
one profile is a center set. Enumeration here is deliberately brute force:
it is the oracle that every closed-form characterization is checked against.
"""

from __future__ import annotations

from .errors import BadParamsError, EmptyProfileError, TooLargeError
from .graph import Graph, check_vertex_set

# 2^16 profiles at O(n^2) work each stays interactive; larger graphs need an
# explicit opt-in via max_n.
DEFAULT_MAX_N = 16


def check_profile(g: Graph, s) -> frozenset[int]:
    members = check_vertex_set(g, s)
    if not members:
        raise EmptyProfileError("profile must contain at least one vertex")
    return members


def _check_cap(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise TooLargeError(
            f"n={g.n} exceeds the enumeration cap {max_n}; pass a larger max_n to override"
        )


def profile_eccentricity(g: Graph, s, v: int) -> int:
    """max distance from v to any member of the profile s."""
    members = check_profile(g, s)
    row = g.dist[v]
    return max(row[x] for x in members)


def profile_center(g: Graph, s) -> tuple[int, ...]:
    """Vertices minimizing the eccentricity of profile s, sorted; never empty."""
    members = check_profile(g, s)
    rows = g.dist
    eccs = [max(rows[v][x] for x in members) for v in range(g.n)]
    best = min(eccs)
    return tuple(v for v, e in enumerate(eccs) if e == best)


def _mask_center(rows, mask: int) -> tuple[int, ...]:
    """Center of the profile encoded by a nonzero bitmask."""
    ecc = None
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        row = rows[v]
        ecc = row if ecc is None else tuple(map(max, ecc, row))
        m &= m - 1
    best = min(ecc)
    return tuple(v for v, e in enumerate(ecc) if e == best)


class CenterSetFamily:
    """Deduplicated family of vertex sets in canonical (size, lexicographic) order."""

    __slots__ = ("sets", "_members")

    def __init__(self, sets):
        canon = {tuple(sorted(set(s))) for s in sets}
        if any(not s for s in canon):
            raise BadParamsError("families may not contain the empty set")
        self.sets: tuple[tuple[int, ...], ...] = tuple(
            sorted(canon, key=lambda t: (len(t), t))
        )
        self._members = frozenset(self.sets)

    @property
    def count(self) -> int:
        return len(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return tuple(sorted(set(s))) in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, CenterSetFamily):
            return NotImplemented
        return self.sets == other.sets

    def __hash__(self) -> int:
        return hash(self.sets)

    def __repr__(self) -> str:
        return f"CenterSetFamily(count={self.count})"


def enumerate_center_sets(g: Graph, max_n: int = DEFAULT_MAX_N) -> CenterSetFamily:
    """Centers of every nonempty profile (the full vertex set included), deduplicated.

    Walks the subset tree so each profile extends its parent's eccentricity
    vector by one vertex; output is canonical regardless of visit order.
    """
    _check_cap(g, max_n)
    n = g.n
    rows = g.dist
    found: set[tuple[int, ...]] = set()

    def extend(start: int, ecc) -> None:
        for v in range(start, n):
            cur = rows[v] if ecc is None else tuple(map(max, ecc, rows[v]))
            best = min(cur)
            found.add(tuple(i for i, e in enumerate(cur) if e == best))
            extend(v + 1, cur)

    extend(0, None)
    return CenterSetFamily(found)


def center_number(g: Graph, max_n: int = DEFAULT_MAX_N) -> int:
    """Number of distinct center sets of g."""
    return enumerate_center_sets(g, max_n).count


def is_center_set(g: Graph, a, max_n: int = DEFAULT_MAX_N):
    """Return a witness profile whose center equals a, or None.

    Profiles are tried in ascending bitmask order, so the witness is
    reproducible across runs.
    """
    target = tuple(sorted(check_vertex_set(g, a)))
    if not target:
        raise BadParamsError("candidate center set must be nonempty")
    _check_cap(g, max_n)
    n = g.n
    rows = g.dist
    for mask in range(1, 1 << n):
        if _mask_center(rows, mask) == target:
            return tuple(v for v in range(n) if mask >> v & 1)
    return None
