import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrcoh.core_math import (
    AbelianGroup,
    ComplexError,
    cohomology_of_pair,
    rank,
    rank_mod_p,
    smith_normal_form,
    solve_intersection,
    transpose,
)

small_ints = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def det(m):
    """Leibniz expansion; independent of any elimination code."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, p in enumerate(perm):
            term *= m[i][p]
        total += -term if inversions % 2 else term
    return total


def determinantal_invariants(m):
    """Invariant factors as ratios of gcds of k x k minors."""
    rows, cols = len(m), len(m[0])
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


class TestRank:
    def test_identity(self):
        assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3

    def test_zero(self):
        assert rank([[0, 0], [0, 0]]) == 0

    def test_proportional_rows(self):
        assert rank([[1, 2], [2, 4]]) == 1

    def test_rational_entries(self):
        assert rank([[Fraction(1, 3), Fraction(2, 3)], [1, 2]]) == 1

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            rank([[0.5, 1]])

    @given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
    def test_rank_of_transpose(self, m):
        assert rank(m) == rank(transpose(m))


class TestSolveIntersection:
    def test_two_axes_meet_in_origin(self):
        sub = solve_intersection([[1, 0], [0, 1]], [0, 0])
        assert sub.point == (0, 0) and sub.basis == ()

    def test_parallel_is_empty(self):
        assert solve_intersection([[1], [1]], [0, 1]) is None

    def test_diagonal_line_in_3space(self):
        # x = y and x = z, i.e. x - y = 0, x - z = 0
        sub = solve_intersection([[1, -1, 0], [1, 0, -1]], [0, 0])
        assert sub.dim == 1
        (v,) = sub.basis
        assert v[0] == v[1] == v[2] != 0

    def test_dimension_formula(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        sub = solve_intersection(rows, [1, 2, 5])
        assert sub.dim == 3 - rank(rows)
        for r, c in zip(rows, [1, 2, 5]):
            assert sum(a * x for a, x in zip(r, sub.point)) == c


class TestSmithNormalForm:
    def test_diag_2_3(self):
        # brute force: gcd of entries is 1, determinant is 6
        assert determinantal_invariants([[2, 0], [0, 3]]) == [1, 6]
        assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]

    def test_identity(self):
        assert smith_normal_form([[int(i == j) for j in range(4)] for i in range(4)]) == [1, 1, 1, 1]

    def test_zero_map(self):
        assert smith_normal_form([[0]]) == []

    def test_known_example(self):
        m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
        assert smith_normal_form(m) == [1, 10, 30]

    @settings(max_examples=150)
    @given(matrices(3, 3))
    def test_matches_minor_gcds_3x3(self, m):
        assert smith_normal_form(m) == determinantal_invariants(m)

    @settings(max_examples=60)
    @given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
    def test_chain_and_rank(self, m):
        inv = smith_normal_form(m)
        assert len(inv) == rank(m)
        assert all(x > 0 for x in inv)
        assert all(b % a == 0 for a, b in zip(inv, inv[1:]))
        assert inv == determinantal_invariants(m)


class TestCohomologyOfPair:
    def test_twisted_circle_quotient(self):
        g = cohomology_of_pair([[-2]], [[0]])
        assert g == AbelianGroup(0, (2,))

    def test_zero_maps(self):
        k = 3
        g = cohomology_of_pair([[0]] * k, [[0] * k])
        assert g == AbelianGroup(k)

    def test_zero_maps_from_nothing(self):
        assert cohomology_of_pair([], [], dim=5) == AbelianGroup(5)

    def test_injective_out(self):
        assert cohomology_of_pair([[0]], [[3]]) == AbelianGroup(0)

    def test_rejects_non_complex(self):
        with pytest.raises(ComplexError):
            cohomology_of_pair([[1]], [[1]])

    def test_mixed_torsion_regrouped(self):
        # Z/2 + Z/3 = Z/6 in invariant-factor form
        g = cohomology_of_pair([[2, 0], [0, 3]], [[0, 0]])
        assert g == AbelianGroup(0, (6,))


class TestAbelianGroup:
    def test_rejects_broken_chain(self):
        with pytest.raises(ValueError):
            AbelianGroup(0, (2, 3))

    def test_str(self):
        assert str(AbelianGroup(1, (2, 2))) == "Z + Z_2^2"
        assert str(AbelianGroup()) == "0"

    def test_from_invariants(self):
        assert AbelianGroup.from_invariants(0, [1, 4, 6, 1]) == AbelianGroup(0, (2, 12))


def test_rank_mod_2():
    assert rank_mod_p([[2, 0], [0, 1]]) == 1
    assert rank_mod_p([[1, 1], [1, -1]]) == 1
    assert rank_mod_p([[1, 1], [1, -1]], 3) == 2
