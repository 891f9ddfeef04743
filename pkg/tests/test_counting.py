import pytest

from centersets import (
    COUNT_FUNCTIONS,
    BadParamsError,
    ClassSpec,
    TooLargeError,
    center_number,
    center_number_formula,
    circular_no_alternate_pair,
    circular_no_three_consecutive,
    linear_no_alternate_pair,
    linear_no_three_consecutive,
    linear_no_two_consecutive,
    oracle_count,
)
from centersets.generators import (
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    path,
    random_tree,
    wheel,
)


def poly_coefficient(n: int, k: int) -> int:
    """Third route for the no-three-consecutive count: literally expand
    (1 + t + t^2)^(n-k+1) and read off the t^k coefficient."""
    if k < 0 or k > n:
        return 0
    coeffs = [1]
    for _ in range(n - k + 1):
        nxt = [0] * (len(coeffs) + 2)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] += c
            nxt[i + 2] += c
        coeffs = nxt
    return coeffs[k] if k < len(coeffs) else 0


class TestLinearCounts:
    def test_no_three_consecutive_examples(self):
        assert linear_no_three_consecutive(5, 3) == 7
        assert linear_no_three_consecutive(3, 3) == 0
        assert linear_no_three_consecutive(2, 2) == 1
        assert all(linear_no_three_consecutive(n, 0) == 1 for n in range(0, 10))
        assert linear_no_three_consecutive(4, 9) == 0

    def test_no_three_consecutive_matches_polynomial(self):
        for n in range(0, 16):
            for k in range(0, n + 1):
                assert linear_no_three_consecutive(n, k) == poly_coefficient(n, k)

    def test_no_two_consecutive_examples(self):
        assert linear_no_two_consecutive(4, 2) == 3
        assert linear_no_two_consecutive(5, 3) == 1
        assert all(linear_no_two_consecutive(n, 1) == n for n in range(1, 10))
        assert linear_no_two_consecutive(3, 5) == 0

    def test_no_two_consecutive_row_sums_are_fibonacci(self):
        fib = [1, 1]
        while len(fib) < 24:
            fib.append(fib[-1] + fib[-2])
        for n in range(0, 21):
            row = sum(linear_no_two_consecutive(n, k) for k in range(n + 1))
            assert row == fib[n + 1]  # fib[0] is F_1

    def test_no_alternate_pair_examples(self):
        assert linear_no_alternate_pair(4, 2) == 4
        assert linear_no_alternate_pair(5, 3) == 2
        assert all(linear_no_alternate_pair(n, 1) == n for n in range(1, 10))
        assert linear_no_alternate_pair(0, 0) == 1


class TestCircularCounts:
    def test_no_three_consecutive_examples(self):
        assert circular_no_three_consecutive(6, 3) == 14
        assert circular_no_three_consecutive(6, 4) == 3
        assert circular_no_three_consecutive(4, 2) == 6
        assert all(circular_no_three_consecutive(n, 1) == n for n in range(4, 12))
        assert all(circular_no_three_consecutive(n, 0) == 1 for n in range(4, 12))

    def test_no_alternate_pair_examples(self):
        assert circular_no_alternate_pair(5, 2) == 5
        assert circular_no_alternate_pair(4, 2) == 4
        assert circular_no_alternate_pair(7, 3) == 7
        assert circular_no_alternate_pair(9, 4) == 9
        assert all(circular_no_alternate_pair(n, 1) == n for n in range(4, 12))

    def test_short_circle_base_cases(self):
        for n in (4, 5):
            for k in range(3, n + 1):
                assert circular_no_alternate_pair(n, k) == 0

    def test_small_circles_rejected(self):
        for fn in (circular_no_three_consecutive, circular_no_alternate_pair):
            with pytest.raises(BadParamsError):
                fn(3, 1)


class TestOracle:
    def test_formulas_match_oracle(self):
        for label, fn in COUNT_FUNCTIONS.items():
            lo = 4 if label in ("R", "R1") else 0
            for n in range(lo, 15):
                for k in range(0, n + 1):
                    assert fn(n, k) == oracle_count(label, n, k), (label, n, k)

    def test_out_of_range_k_is_zero(self):
        assert oracle_count("L", 5, 9) == 0
        assert oracle_count("L", 5, -1) == 0

    def test_cap(self):
        with pytest.raises(TooLargeError):
            oracle_count("L", 25, 3)

    def test_unknown_label(self):
        with pytest.raises(BadParamsError):
            oracle_count("Z", 5, 2)

    def test_circular_min_size(self):
        with pytest.raises(BadParamsError):
            oracle_count("R1", 3, 1)


class TestCenterNumberFormula:
    def test_examples(self):
        assert center_number_formula(ClassSpec("complete", n=4)) == 5
        assert center_number_formula(ClassSpec("tree", n=4)) == 7
        assert center_number_formula(ClassSpec("complete-minus-edge", n=4)) == 8
        assert center_number_formula(ClassSpec("complete-minus-edge", n=5)) == 9
        assert center_number_formula(ClassSpec("wheel", n=5)) == 19
        assert center_number_formula(ClassSpec("wheel", n=6)) == 21
        assert center_number_formula(ClassSpec("wheel", n=7)) == 25
        # C_6: 6 + 15 + 14 + 3 + 1
        assert center_number_formula(ClassSpec("even-cycle", n=6)) == 39
        # C_5: 5 + 5 + 1
        assert center_number_formula(ClassSpec("odd-cycle", n=5)) == 11

    def test_complete_bipartite_counts_cross_pairs(self):
        assert center_number_formula(ClassSpec("complete-bipartite", n=2, m=2)) == 11
        assert center_number_formula(ClassSpec("complete-bipartite", n=3, m=2)) == 14
        assert center_number_formula(ClassSpec("complete-bipartite", n=3, m=3)) == 18

    def test_bad_params(self):
        for spec in (
            ClassSpec("complete", n=1),
            ClassSpec("complete-minus-edge", n=3),
            ClassSpec("wheel", n=4),
            ClassSpec("even-cycle", n=5),
            ClassSpec("odd-cycle", n=6),
            ClassSpec("odd-cycle", n=3),
            ClassSpec("complete-bipartite", n=3, m=1),
            ClassSpec("block-graph", n=5),
            ClassSpec("symmetric-even", n=6),
            ClassSpec("tree"),
        ):
            with pytest.raises(BadParamsError):
                center_number_formula(spec)

    def test_matches_enumeration_on_instances(self):
        cases = [
            (ClassSpec("complete", n=n), complete(n)) for n in range(2, 9)
        ]
        cases += [
            (ClassSpec("complete-bipartite", m=m, n=n), complete_bipartite(m, n))
            for m in range(2, 6)
            for n in range(m, 6)
        ]
        cases += [(ClassSpec("tree", n=n), path(n)) for n in range(2, 11)]
        cases += [
            (ClassSpec("tree", n=n), random_tree(n, seed))
            for n, seed in ((5, 11), (6, 12), (7, 13), (8, 14), (9, 15))
        ]
        cases += [
            (ClassSpec("complete-minus-edge", n=n), complete_minus_edge(n))
            for n in range(4, 9)
        ]
        cases += [(ClassSpec("wheel", n=n), wheel(n)) for n in range(5, 10)]
        cases += [(ClassSpec("even-cycle", n=n), cycle(n)) for n in (4, 6, 8, 10)]
        cases += [(ClassSpec("odd-cycle", n=n), cycle(n)) for n in (5, 7, 9)]
        for spec, g in cases:
            assert center_number_formula(spec) == center_number(g), spec
