import itertools
import math
from fractions import Fraction

import pytest

from descent_polytopes.ehrhart import (
    EhrhartPoly,
    alpha_from_composition,
    count_lattice_points,
    descent_statistic,
    ehrhart_polynomial,
    ehrhart_series,
    interpolate,
    q_series,
    rword_counts,
)
from descent_polytopes.fvector import vertex_count
from descent_polytopes.words import XYWord, alternating_word, enumerate_words, iter_words, word_from_set


class TestLatticePoints:
    @pytest.mark.parametrize("r", range(6))
    def test_segment_and_triangle(self, r):
        assert count_lattice_points("", r) == r + 1
        assert count_lattice_points("x", r) == (r + 1) * (r + 2) // 2

    def test_pyramid(self):
        assert count_lattice_points("yx", 1) == 5
        assert count_lattice_points("yx", 1, method="naive") == 5

    def test_dp_matches_naive(self):
        for v in iter_words(5):
            for r in range(4):
                assert count_lattice_points(v, r) == count_lattice_points(v, r, method="naive")

    def test_errors(self):
        with pytest.raises(ValueError):
            count_lattice_points("x", -1)
        with pytest.raises(ValueError):
            count_lattice_points("x" * 9, 9, method="naive")
        with pytest.raises(ValueError):
            count_lattice_points("x", 1, method="bogus")


class TestRWords:
    def test_examples(self):
        c = rword_counts("x", 1)
        assert (c.alpha, c.beta) == (3, 3)
        assert rword_counts("y", 1).beta == 1
        for r in range(5):
            c = rword_counts("", r)
            assert c.alpha == c.beta == r + 1

    def test_brute_force(self):
        for v in iter_words(4):
            for r in range(3):
                want = tuple(c == "y" for c in v)
                alpha = beta = 0
                for w in itertools.product(range(r + 1), repeat=v.n):
                    d = tuple(a > b for a, b in zip(w, w[1:]))
                    beta += d == want
                    alpha += all(b or not a for a, b in zip(d, want))
                c = rword_counts(v, r)
                assert (c.alpha, c.beta) == (alpha, beta)

    def test_closed_form(self):
        for v in iter_words(8):
            for r in range(6):
                c = rword_counts(v, r)
                assert c.alpha == c.alpha_closed_form == alpha_from_composition(v, r)
                assert c.alpha >= c.beta >= 0

    def test_inclusion_exclusion(self):
        for v in iter_words(5):
            s = v.descent_set()
            for r in range(3):
                total = sum(rword_counts(word_from_set(v.n, sub), r).beta
                            for k in range(len(s) + 1) for sub in itertools.combinations(s, k))
                assert total == rword_counts(v, r).alpha


class TestSeries:
    def test_q_series(self):
        assert q_series(0, 5) == [1] * 6
        assert q_series(1, 3)[0] == 2
        assert q_series(2, 3)[2] == 10

    def test_examples(self):
        assert ehrhart_series(1, 4, "A")[""] == 2
        assert ehrhart_series(1, 4, "B")["y"] == 1
        assert ehrhart_series(1, 4, "I")["yx"] == 5

    def test_stages_match_counts(self):
        for r in range(4):
            a, b, i = (ehrhart_series(r, 7, s) for s in "ABI")
            for v in iter_words(7):
                c = rword_counts(v, r)
                assert a[v] == c.alpha
                assert b[v] == c.beta
                assert i[v] == count_lattice_points(v, r)

    def test_errors(self):
        with pytest.raises(ValueError):
            ehrhart_series(1, 13)
        with pytest.raises(ValueError):
            ehrhart_series(1, 4, "C")


class TestEhrhartPolynomial:
    def test_interpolate(self):
        assert interpolate([(0, 1), (1, 3), (2, 6)]) == [1, Fraction(3, 2), Fraction(1, 2)]

    def test_small(self):
        assert ehrhart_polynomial("").coefficients == (1, 1)
        assert ehrhart_polynomial("x").coefficients == (1, Fraction(3, 2), Fraction(1, 2))
        assert ehrhart_polynomial("yx").leading == Fraction(1, 3)

    def test_json(self):
        assert ehrhart_polynomial("yx").to_dict() == {
            "word": "yx", "ehrhart": ["1/3", "3/2", "13/6", "1"], "beta": 2, "volume": "1/3"}

    def test_invariants(self):
        for v in iter_words(8):
            p = ehrhart_polynomial(v)
            assert isinstance(p, EhrhartPoly)
            assert p.degree == v.n
            assert p(0) == 1
            assert p(1) == vertex_count(v)
            assert p.leading == Fraction(descent_statistic(v), math.factorial(v.n))
            assert all(p(r) == count_lattice_points(v, r) > 0 for r in range(2 * v.n + 1))

    def test_vertex_count_up_to_ten(self):
        for v in iter_words(10):
            assert count_lattice_points(v, 1) == vertex_count(v)

    def test_symmetry(self):
        for v in iter_words(8):
            p = ehrhart_polynomial(v).coefficients
            assert ehrhart_polynomial(v.complement()).coefficients == p
            assert ehrhart_polynomial(v.reverse()).coefficients == p

    def test_large_r(self):
        p = ehrhart_polynomial("xyyx")
        assert p(40) == count_lattice_points("xyyx", 40)

    def test_cap(self):
        with pytest.raises(ValueError):
            ehrhart_polynomial("x" * 13)


class TestDescentStatistic:
    def test_examples(self):
        assert descent_statistic("") == 1
        assert descent_statistic("yx") == 2

    def test_partition_of_permutations(self):
        for n in range(1, 9):
            assert sum(descent_statistic(v, "dp") for v in enumerate_words(n - 1)) == math.factorial(n)

    def test_methods_agree(self):
        for v in iter_words(6):
            assert descent_statistic(v, "brute") == descent_statistic(v, "dp")
        z = alternating_word(8)
        assert descent_statistic(z, "brute") == descent_statistic(z, "dp") == 7936

    def test_alternating_are_euler_numbers(self):
        euler = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765]
        for n in range(1, 13):
            assert descent_statistic(alternating_word(n - 1)) == euler[n]

    def test_caps(self):
        with pytest.raises(ValueError):
            descent_statistic(XYWord("x" * 10), "brute")
        with pytest.raises(ValueError):
            descent_statistic(XYWord("x" * 16), "dp")
