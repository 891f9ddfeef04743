"""Counts of k-subsets of linear or circular arrangements avoiding a pattern,
plus closed forms for the center number of the supported graph classes.

The five selection counts and their CLI labels:

  L   linear,   no three chosen positions consecutive
  L2  linear,   no two chosen positions consecutive
  L1  linear,   no two chosen positions exactly two apart
  R   circular, no three chosen positions consecutive
  R1  circular, no two chosen positions exactly two apart

Every closed form is cross-checked against `oracle_count`, an exhaustive
bitmask enumeration of the same definition. Python integers are arbitrary
precision, so the counts never overflow.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import BadParamsError, TooLargeError
from .families import ClassSpec

ORACLE_MAX_N = 24


def linear_no_three_consecutive(n: int, k: int) -> int:
    """Ways to choose k of n positions in a row with no three consecutive.

    Coefficient of t^k in (1+t+t^2)^(n-k+1): each of the n-k+1 gaps between
    and around the unchosen positions holds 0, 1, or 2 chosen ones. Expanding
    through (1-t^3)^m (1-t)^-m gives the alternating binomial sum used here.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    m = n - k + 1
    return sum(
        (-1) ** j * comb(m, j) * comb(n - 3 * j, k - 3 * j)
        for j in range(k // 3 + 1)
    )


def linear_no_two_consecutive(n: int, k: int) -> int:
    """Ways to choose k of n positions in a row with no two consecutive."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n - k + 1 < 0:
        return 0
    return comb(n - k + 1, k)


def linear_no_alternate_pair(n: int, k: int) -> int:
    """Ways to choose k of n positions in a row with no two exactly two apart.

    Positions split into odds and evens; "two apart" means consecutive within
    one class, so the count is a convolution of two no-two-consecutive counts.
    """
    if k < 0 or n < 0:
        return 1 if k == 0 and n >= 0 else 0
    odds = (n + 1) // 2
    evens = n // 2
    return sum(
        linear_no_two_consecutive(odds, j) * linear_no_two_consecutive(evens, k - j)
        for j in range(k + 1)
    )


def _require_circular(n: int) -> None:
    if n < 4:
        raise BadParamsError(f"circular counts need n >= 4, got {n}")


def circular_no_three_consecutive(n: int, k: int) -> int:
    """Ways to choose k of n positions on a circle with no three consecutive.

    Splitting on whether the last position and its neighbors are chosen
    reduces each case to a linear count.
    """
    _require_circular(n)
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return n
    return (
        linear_no_three_consecutive(n - 1, k)
        + 2 * linear_no_three_consecutive(n - 4, k - 2)
        + linear_no_three_consecutive(n - 3, k - 1)
    )


def circular_no_alternate_pair(n: int, k: int) -> int:
    """Ways to choose k of n positions on a circle with no two exactly two apart.

    For n of 4 or 5 the answer is direct (n when k is 2, nothing for larger
    k); from n = 6 on, casing on the last two positions reduces to linear
    counts.
    """
    _require_circular(n)
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k == 1:
        return n
    if n in (4, 5):
        return n if k == 2 else 0
    return (
        linear_no_alternate_pair(n - 2, k)
        + 2 * linear_no_alternate_pair(n - 5, k - 1)
        + 3 * linear_no_alternate_pair(n - 6, k - 2)
    )


COUNT_FUNCTIONS = {
    "L": linear_no_three_consecutive,
    "L2": linear_no_two_consecutive,
    "L1": linear_no_alternate_pair,
    "R": circular_no_three_consecutive,
    "R1": circular_no_alternate_pair,
}

_CIRCULAR_LABELS = ("R", "R1")


@lru_cache(maxsize=None)
def _oracle_row(label: str, n: int) -> tuple[int, ...]:
    """Counts by popcount of every n-bit string free of the labeled pattern."""
    counts = [0] * (n + 1)
    if label == "L":
        for mask in range(1 << n):
            if not mask & (mask >> 1) & (mask >> 2):
                counts[mask.bit_count()] += 1
    elif label == "L2":
        for mask in range(1 << n):
            if not mask & (mask >> 1):
                counts[mask.bit_count()] += 1
    elif label == "L1":
        for mask in range(1 << n):
            if not mask & (mask >> 2):
                counts[mask.bit_count()] += 1
    elif label == "R":
        full = (1 << n) - 1
        for mask in range(1 << n):
            dd = mask | (mask << n)
            if not dd & (dd >> 1) & (dd >> 2) & full:
                counts[mask.bit_count()] += 1
    else:  # R1
        full = (1 << n) - 1
        for mask in range(1 << n):
            dd = mask | (mask << n)
            if not dd & (dd >> 2) & full:
                counts[mask.bit_count()] += 1
    return tuple(counts)


def oracle_count(label: str, n: int, k: int) -> int:
    """Exhaustive bitmask count of the labeled pattern-free selections."""
    if label not in COUNT_FUNCTIONS:
        raise BadParamsError(f"unknown count label {label!r}")
    if n < 0:
        raise BadParamsError(f"n must be nonnegative, got {n}")
    if n > ORACLE_MAX_N:
        raise TooLargeError(f"oracle enumerates 2^n strings; n={n} exceeds {ORACLE_MAX_N}")
    if label in _CIRCULAR_LABELS:
        _require_circular(n)
    if k < 0 or k > n:
        return 0
    return _oracle_row(label, n)[k]


def center_number_formula(spec: ClassSpec) -> int:
    """Closed-form center number for the classes that have one.

    `spec.n` is the vertex count throughout, including for cycles.
    """
    tag, n, m = spec.tag, spec.n, spec.m
    if tag == "complete":
        if n is None or n < 2:
            raise BadParamsError("complete needs n >= 2")
        return n + 1
    if tag == "tree":
        if n is None or n < 1:
            raise BadParamsError("tree needs n >= 1")
        return 2 * n - 1
    if tag == "complete-bipartite":
        if n is None or m is None or n < 2 or m < 2:
            raise BadParamsError("complete-bipartite needs part sizes m, n >= 2")
        # the whole set, both parts, m+n singletons, and m*n cross pairs;
        # enumeration confirms the cross pairs are centers of themselves
        return m * n + m + n + 3
    if tag == "complete-minus-edge":
        if n is None or n < 4:
            raise BadParamsError("complete-minus-edge needs n >= 4")
        return n + 4
    if tag == "wheel":
        if n is None or n < 5:
            raise BadParamsError("wheel needs n >= 5 vertices")
        return 19 if n == 5 else 4 * n - 3
    if tag == "even-cycle":
        if n is None or n < 4 or n % 2 == 1:
            raise BadParamsError("even-cycle needs an even n >= 4")
        return 1 + sum(
            circular_no_three_consecutive(n, k) for k in range(1, 2 * n // 3 + 1)
        )
    if tag == "odd-cycle":
        if n is None or n < 5 or n % 2 == 0:
            raise BadParamsError("odd-cycle needs an odd n >= 5")
        return 1 + sum(
            circular_no_alternate_pair(n, k) for k in range(1, (n - 1) // 2 + 1)
        )
    raise BadParamsError(f"no closed-form center number for class {tag!r}")
