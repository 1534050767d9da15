import numpy as np

from algebra.codes import Polynomial, evaluate_code, zero_code
from algebra.errors import BudgetExceededError, CodeError, CurveError
from algebra.monomial import Monomial, build_box, delta_star
from oracle import (
    SubspaceIterator,
    common_zero_count,
    gaussian_binomial,
    ghw_bruteforce,
    rghw_bruteforce,
    witness_family,
)
from oracle.bruteforce import pack_supports, popcount
from oracle.sweeps import decreasing_sets, oracle_sweep, run_suite, witness_sweep

from .base_test import NormTraceTest, curve, monomials


class SubspaceTest(NormTraceTest):
    """reduced row echelon enumeration of subspaces"""

    def test_counts(self):
        self.assertEqual(gaussian_binomial(3, 2, 2), 7)
        self.assertEqual(gaussian_binomial(2, 1, 4), 5)
        self.assertEqual(gaussian_binomial(4, 0, 3), 1)
        for Q, k, r in [(2, 3, 2), (4, 2, 1), (3, 3, 1), (2, 4, 2)]:
            iterator = SubspaceIterator(Q, k, r)
            bases = [tuple(map(tuple, basis)) for basis in iterator]
            self.assertEqual(len(bases), gaussian_binomial(k, r, Q))
            self.assertEqual(len(set(bases)), len(bases))
            self.assertEqual(len(iterator), len(bases))

    def test_pivot_limit(self):
        iterator = SubspaceIterator(2, 3, 1, pivot_limit=1)
        bases = list(iterator)
        # pivot in the first column, two free entries
        self.assertEqual(len(bases), 4)
        self.assertTrue(all(basis[0][0] == 1 for basis in bases))
        with self.assertRaises(CodeError):
            SubspaceIterator(2, 3, 2, pivot_limit=1)

    def test_popcount(self):
        words = np.zeros((2, 70), dtype=np.int64)
        words[0, [0, 5, 64, 69]] = 3
        words[1, :] = 1
        self.assertEqual(popcount(pack_supports(words)).tolist(), [4, 70])


class BruteforceTest(NormTraceTest):
    """minimum supports over all subcodes"""

    def setUp(self):
        super().setUp()
        self.X = curve(2, 2, 1)
        self.C = evaluate_code(self.X, monomials(self.X.params, [(0, 0), (0, 1)]))

    def test_small_code(self):
        self.assertEqual([ghw_bruteforce(self.C, r) for r in (1, 2)], [3, 4])
        zero = zero_code(self.X.field, 4)
        self.assertEqual([rghw_bruteforce(self.C, zero, r) for r in (1, 2)], [3, 4])

    def test_repetition(self):
        C = evaluate_code(self.X, monomials(self.X.params, [(0, 0)]))
        self.assertEqual(ghw_bruteforce(C, 1), 4)

    def test_full_relative(self):
        box = build_box(self.X.params)
        C1 = evaluate_code(self.X, box)
        C2 = evaluate_code(self.X, monomials(self.X.params, [(0, 0)]))
        # a coordinate hyperplane misses the all-ones word
        self.assertEqual(rghw_bruteforce(C1, C2, 3), 3)

    def test_errors(self):
        with self.assertRaises(BudgetExceededError):
            ghw_bruteforce(self.C, 1, budget=2)
        with self.assertRaises(CodeError):
            rghw_bruteforce(evaluate_code(self.X, monomials(self.X.params, [(0, 0)])), self.C, 1)

    def test_sweep(self):
        checks = oracle_sweep([(2, 2, 1), (2, 2, 3), (3, 2, 1)], max_size=4)
        self.assertTrue(checks)
        self.assertTrue(all(check.passed for check in checks), [c.name for c in checks if not c.passed][:3])

    def test_decreasing_sets(self):
        params = self.X.params
        sets = list(decreasing_sets(params, 4))
        # every decreasing subset of the 2x2 box except the empty one
        self.assertEqual(len(sets), 5)
        self.assertTrue(all(M.is_decreasing for M in sets))


class WitnessTest(NormTraceTest):
    """polynomial families attaining the footprint bound"""

    def test_common_zeros(self):
        X = curve(2, 2, 1)
        self.assertEqual(common_zero_count([Polynomial.monomial(X.field, Monomial(1, 0))], X), 2)
        self.assertEqual(common_zero_count([Polynomial.constant(X.field)], X), 0)
        with self.assertRaises(CodeError):
            common_zero_count([], X)

    def test_families(self):
        X = curve(3, 2, 4)
        for pairs, zeros in [([(2, 1)], 10), ([(6, 0)], 18), ([(0, 0)], 0), ([(3, 1), (2, 1), (2, 2)], 10)]:
            N = monomials(X.params, pairs)
            family = witness_family(N, X)
            self.assertEqual({f.initial(X.params) for f in family}, set(N.members))
            self.assertEqual(common_zero_count(family, X), zeros)
            self.assertEqual(delta_star(N.members, X.params), zeros)

    def test_gamma(self):
        X = curve(3, 2, 2)
        N = monomials(X.params, [(1, 1), (3, 0)])
        for gamma in (1, 2):
            family = witness_family(N, X, gamma=gamma)
            self.assertEqual(common_zero_count(family, X), delta_star(N.members, X.params))
        with self.assertRaises(CurveError):
            witness_family(N, X, gamma=0)

    def test_sweep(self):
        checks = witness_sweep([(2, 2, 1), (2, 2, 3), (3, 2, 2)], count=60, seed=3)
        self.assertEqual(len(checks), 120)
        self.assertTrue(all(check.passed for check in checks), [c.name for c in checks if not c.passed][:3])

    def test_run_suite(self):
        report = run_suite("all", {"witness": lambda: witness_sweep([(2, 2, 1)], count=5)})
        self.assertTrue(report.passed)
        self.assertEqual(report.suite, "all")
