"""Period-index arithmetic: valuations, per-prime bounds, reports."""

import random
from fractions import Fraction
from math import factorial, gcd

import pytest

from periodindex.bounds import (BoundComparison, BoundReport, compare_bounds,
                                differential_order_bound, factorize, index_bound,
                                is_prime, known_sharp_bound, legendre_valuation,
                                padic_valuation, prime_power_index_bound)
from periodindex.complexes import exponent_bound


class TestNumberTheory:
    def test_is_prime(self):
        primes = [n for n in range(60) if is_prime(n)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]

    def test_factorize(self):
        assert factorize(1) == []
        assert factorize(12) == [(2, 2), (3, 1)]
        assert factorize(97) == [(97, 1)]
        with pytest.raises(ValueError):
            factorize(0)

    @pytest.mark.parametrize("p, m, expected", [(2, 12, 2), (3, 12, 1), (5, 12, 0)])
    def test_padic_valuation(self, p, m, expected):
        assert padic_valuation(p, m) == expected

    @pytest.mark.parametrize("p, m, expected", [(2, 3, 1), (3, 3, 1), (2, 6, 4)])
    def test_legendre_valuation(self, p, m, expected):
        assert legendre_valuation(p, m) == expected

    def test_legendre_equals_sum_of_valuations(self):
        for p in (2, 3, 5, 7):
            for m in range(41):
                assert legendre_valuation(p, m) == \
                    sum(padic_valuation(p, j) for j in range(2, m + 1))


class TestDifferentialOrderBound:
    @pytest.mark.parametrize("p, r, j, expected", [
        (2, 1, 1, 2),
        (2, 1, 2, 4),
        (3, 2, 9, 81),
    ])
    def test_values(self, p, r, j, expected):
        assert differential_order_bound(p, r, j) == expected

    def test_matches_model_exponent_bound(self):
        # the differential order traces exactly to the homology exponents
        for p in (2, 3, 5):
            for r in (1, 2):
                for j in range(1, 13):
                    assert differential_order_bound(p, r, j) == exponent_bound(p, r, j)


class TestPrimePowerIndexBound:
    @pytest.mark.parametrize("p, r, d, expected", [
        (2, 1, 3, 8),
        (2, 1, 1, 1),   # empty product
        (7, 3, 1, 1),
        (2, 1, 2, 2),   # forces ind = per at d = 2
    ])
    def test_values(self, p, r, d, expected):
        assert prime_power_index_bound(p, r, d) == expected

    def test_two_routes_agree(self):
        # the implementation asserts internally; drive the grid anyway
        for p in (2, 3, 5, 7):
            for r in (1, 2, 3):
                for d in range(1, 11):
                    closed = p ** ((d - 1) * r + legendre_valuation(p, d - 1))
                    assert prime_power_index_bound(p, r, d) == closed

    def test_divisibility_in_d(self):
        for p in (2, 3, 5):
            for r in (1, 2):
                for d in range(1, 10):
                    assert prime_power_index_bound(p, r, d + 1) % \
                        prime_power_index_bound(p, r, d) == 0


class TestIndexBound:
    def test_period_two_dimension_six(self):
        assert index_bound(2, 3).theorem_a_bound == 8

    def test_period_six_dimension_eight(self):
        report = index_bound(6, 4)
        assert report.theorem_a_bound == 1296
        assert report.prime_breakdown == ((2, 1, 16), (3, 1, 81))
        assert not report.corollary_b_applies

    def test_coprime_case(self):
        report = index_bound(5, 4)
        assert report.theorem_a_bound == 125
        assert report.corollary_b_applies

    def test_trivial_class(self):
        assert index_bound(1, 5).theorem_a_bound == 1

    def test_report_invariants(self):
        rng = random.Random(9)
        for _ in range(50):
            n, d = rng.randint(1, 80), rng.randint(1, 8)
            report = index_bound(n, d)
            prod = 1
            nn = 1
            for p, r, bound in report.prime_breakdown:
                prod *= bound
                nn *= p ** r
            assert prod == report.theorem_a_bound
            assert nn == n
            if report.corollary_b_applies:
                assert report.theorem_a_bound == n ** (d - 1)

    def test_multiplicative_over_coprime_factors(self):
        rng = random.Random(13)
        checked = 0
        while checked < 80:
            n1, n2 = rng.randint(1, 50), rng.randint(1, 50)
            if gcd(n1, n2) != 1:
                continue
            d = rng.randint(1, 8)
            checked += 1
            assert index_bound(n1 * n2, d).theorem_a_bound == \
                index_bound(n1, d).theorem_a_bound * index_bound(n2, d).theorem_a_bound

    def test_coprime_flag_matches_definition(self):
        for n in range(1, 101):
            for d in range(1, 9):
                report = index_bound(n, d)
                assert report.corollary_b_applies == (gcd(n, factorial(d - 1)) == 1)

    def test_monotone_above_free_part(self):
        for n in range(2, 60):
            for d in range(2, 9):
                report = index_bound(n, d)
                assert report.theorem_a_bound >= n ** (d - 1)
                assert (report.theorem_a_bound == n ** (d - 1)) == \
                    report.corollary_b_applies

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            index_bound(0, 3)
        with pytest.raises(ValueError):
            index_bound(3, 0)


class TestKnownSharp:
    def test_d4_values(self):
        assert known_sharp_bound(4, 4).value == 64      # 4 | n branch
        assert known_sharp_bound(6, 4).value == 1296
        assert known_sharp_bound(2, 4).value == 2 * 8   # e_2(2) * 2^3
        assert known_sharp_bound(12, 4).value == 3 * 12 ** 3

    def test_d3_equals_general_bound(self):
        for n in range(1, 40):
            assert known_sharp_bound(n, 3).value == index_bound(n, 3).theorem_a_bound

    def test_low_dimensions(self):
        assert known_sharp_bound(7, 1).value == 1
        assert known_sharp_bound(7, 2).value == 7
        assert known_sharp_bound(2, 3).value == 8

    def test_absent_above_four(self):
        assert known_sharp_bound(6, 5) is None
        assert index_bound(6, 5).known_sharp is None


class TestCompareBounds:
    def test_gu_improvement_at_four(self):
        c = compare_bounds(4, 4)
        assert (c.theorem_a_bound, c.known_sharp.value) == (128, 64)
        assert c.ratio == 2
        assert c.sharp_improves

    def test_agreement_when_coprime_to_six(self):
        c = compare_bounds(5, 4)
        assert (c.theorem_a_bound, c.known_sharp.value, c.ratio) == (125, 125, 1)
        assert not c.sharp_improves

    def test_d3_sharp(self):
        c = compare_bounds(3, 3)
        assert (c.theorem_a_bound, c.known_sharp.value) == (9, 9)

    def test_no_sharp_value(self):
        c = compare_bounds(6, 6)
        assert c.known_sharp is None and c.ratio is None and not c.sharp_improves


class TestJson:
    def test_bound_report_round_trip(self):
        for n, d in ((6, 4), (1, 3), (5, 4), (2 ** 10 * 3, 7)):
            report = index_bound(n, d)
            assert BoundReport.from_json_dict(report.to_json_dict()) == report

    def test_comparison_round_trip(self):
        for n, d in ((4, 4), (6, 6), (3, 3)):
            c = compare_bounds(n, d)
            assert BoundComparison.from_json_dict(c.to_json_dict()) == c

    def test_big_integers_as_strings(self):
        payload = index_bound(2 ** 20, 8).to_json_dict()
        assert isinstance(payload["theorem_a"], str)
        assert int(payload["theorem_a"]) == index_bound(2 ** 20, 8).theorem_a_bound

    def test_ratio_serialization(self):
        c = compare_bounds(4, 4)
        assert c.to_json_dict()["ratio"] == "2"
        assert Fraction(c.to_json_dict()["ratio"]) == c.ratio
