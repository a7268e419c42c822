"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (run with ``pytest -s`` to see
them even on success) and enforces the stated wall-clock budget.
"""

import random
import time
from math import factorial, gcd

from periodindex.bounds import compare_bounds, index_bound
from periodindex.verify import suite_elementary, suite_snf, suite_xp_exponent
from periodindex.words import enumerate_words, gamma, phi, psi, sigma, Word


class _Timed:
    def __init__(self, label, budget_seconds):
        self.label = label
        self.budget = budget_seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None and elapsed < self.budget else "FAIL"
        print(f"{status}  {self.label}  ({elapsed:.2f}s, budget {self.budget:g}s)")
        if exc_type is None:
            assert elapsed < self.budget, \
                f"{self.label} took {elapsed:.2f}s, budget {self.budget:g}s"
        return False


def e_p(p, n):
    return p if n % p == 0 else 1


def test_criterion_1_spot_values():
    with _Timed("criterion 1: bound spot values (d=3 example, d=4 formula)", 1.0):
        assert index_bound(2, 3).theorem_a_bound == 8
        for n in range(1, 61):
            assert index_bound(n, 4).theorem_a_bound == e_p(2, n) * e_p(3, n) * n ** 3


def test_criterion_2_coprime_property():
    with _Timed("criterion 2: coprime case equals n^(d-1)", 1.0):
        for n in range(1, 101):
            for d in range(1, 9):
                if gcd(n, factorial(d - 1)) == 1:
                    assert index_bound(n, d).theorem_a_bound == n ** (d - 1)


def test_criterion_3_sharp_comparison():
    with _Timed("criterion 3: sharp d=4 value improves on the general bound", 1.0):
        c = compare_bounds(4, 4)
        assert c.theorem_a_bound == 128
        assert c.known_sharp.value == 64


def test_criterion_4_elementary_oracle_equivalence():
    with _Timed("criterion 4: closed forms == SNF oracle (elementary complexes)", 10.0):
        results = suite_elementary(max_degree=30)
        failures = [r for r in results if not r.passed]
        assert not failures, failures


def test_criterion_5_exponent_law_both_routes():
    with _Timed("criterion 5: model exponent law, Kunneth and SNF routes", 60.0):
        results = suite_xp_exponent(max_k=12)
        failures = [r for r in results if not r.passed]
        assert not failures, failures


def test_criterion_6_multiplicativity():
    with _Timed("criterion 6: multiplicativity over coprime periods", 1.0):
        rng = random.Random(2024)
        checked = 0
        while checked < 200:
            n1, n2 = rng.randint(1, 50), rng.randint(1, 50)
            if gcd(n1, n2) != 1:
                continue
            d = rng.randint(1, 8)
            checked += 1
            assert index_bound(n1 * n2, d).theorem_a_bound == \
                index_bound(n1, d).theorem_a_bound * index_bound(n2, d).theorem_a_bound


def test_criterion_7_word_census():
    with _Timed("criterion 7: height-2 word census for p in {2, 3, 5}", 1.0):
        for p in (2, 3, 5):
            cap = 2 + 2 * p ** 2
            expected = {Word((sigma(), sigma())): 2,
                        Word((sigma(), psi(p, 1))): 3}
            k = 0
            while 1 + 2 * p ** k <= cap:
                expected[Word((sigma(),) + (gamma(p),) * k + (phi(p),))] = 1 + 2 * p ** k
                k += 1
            k = 0
            while 2 + 2 * p ** (k + 1) <= cap:
                expected[Word((phi(p),) + (gamma(p),) * k + (phi(p),))] = \
                    2 + 2 * p ** (k + 1)
                k += 1
            got = {w: d for w, d, h in enumerate_words(p, 1, cap) if h == 2}
            assert got == expected


def test_criterion_8_snf_property_suite():
    with _Timed("criterion 8: SNF divisibility, unimodularity, determinants", 5.0):
        results = suite_snf(seed=2024, cases=100)
        failures = [r for r in results if not r.passed]
        assert not failures, failures
