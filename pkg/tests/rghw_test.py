from algebra.codes import evaluate_code
from algebra.errors import BudgetExceededError, MonomialError
from algebra.monomial import build_onepoint_set, complement_set
from algebra.params import CurveParams
from engines import ghw_exhaustive, ordering_condition, relative_hierarchy, rghw
from oracle.bruteforce import rghw_bruteforce
from oracle.sweeps import onepoint_thresholds, rghw_sweep

from .base_test import NormTraceTest, curve, empty, monomials, values

Q5U3 = CurveParams(5, 2, 3)


class RghwTest(NormTraceTest):
    """relative generalized Hamming weights of nested codes"""

    def setUp(self):
        super().setUp()
        self.M1 = build_onepoint_set(Q5U3, 8)
        self.M2 = build_onepoint_set(Q5U3, 6)

    def test_ordering_condition(self):
        self.assertTrue(ordering_condition(self.M1, self.M2))
        self.assertTrue(ordering_condition(complement_set(self.M2), complement_set(self.M1)))
        self.assertTrue(ordering_condition(self.M1, empty(Q5U3)))
        params = CurveParams(3, 2, 2)
        # y has weight 2 and lies below x
        self.assertFalse(ordering_condition(monomials(params, [(0, 0), (0, 1), (1, 0)]), monomials(params, [(0, 0), (1, 0)])))

    def test_worked_example(self):
        self.result = rghw(Q5U3, self.M1, self.M2, 1)
        self.assertEqual(self.result.value, 57)
        self.assertTrue(self.result.exact and self.result.condition_held)
        self.assertLabels(self.result.witness, ["x1y1"])

        dual = rghw(Q5U3, complement_set(self.M2), complement_set(self.M1), 1)
        self.assertEqual(dual.value, 4)
        self.assertLabels(dual.witness, ["x11y3"])
        self.assertEqual(ghw_exhaustive(Q5U3, complement_set(self.M1), 1).value, 3)

    def test_empty_inner_set(self):
        params = CurveParams(3, 2, 2)
        M = build_onepoint_set(params, 5)
        self.assertEqual(values(relative_hierarchy(params, M, empty(params))), [res.value for res in (ghw_exhaustive(params, M, r) for r in range(1, len(M) + 1))])

    def test_lower_bound(self):
        X = curve(3, 2, 2)
        M1 = monomials(X.params, [(0, 0), (0, 1), (1, 0)])
        M2 = monomials(X.params, [(0, 0), (1, 0)])
        bound = rghw(X.params, M1, M2, 1)
        self.assertFalse(bound.exact or bound.condition_held)
        self.assertEqual(bound.value, 12)
        self.assertGreaterEqual(bound.value, ghw_exhaustive(X.params, M1, 1).value)

        confirmed = rghw(X, M1, M2, 1)
        self.assertTrue(confirmed.exact)
        self.assertFalse(confirmed.condition_held)
        self.assertGreaterEqual(confirmed.value, bound.value)
        self.assertEqual(confirmed.value, rghw_bruteforce(evaluate_code(X, M1), evaluate_code(X, M2), 1))

    def test_small_pairs_against_oracle(self):
        checks = rghw_sweep([(3, 2, 2)], max_size=5, budget=10**5)
        self.assertTrue(checks)
        self.assertTrue(all(check.passed for check in checks), [c.name for c in checks if not c.passed][:3])
        self.assertEqual(onepoint_thresholds(CurveParams(3, 2, 2), 5), [0, 2, 3, 4, 5])

    def test_oracle_over_budget(self):
        X = curve(3, 2, 2)
        C1, C2 = (evaluate_code(X, build_onepoint_set(X.params, lam)) for lam in (6, 4))
        self.assertEqual(rghw_bruteforce(C1, C2, 1), rghw(X.params, build_onepoint_set(X.params, 6), build_onepoint_set(X.params, 4), 1).value)
        with self.assertRaises(BudgetExceededError):
            rghw_bruteforce(C1, C2, 2)
        self.assertFalse(any("lam1=6 lam2=4 r=2" in c.name for c in rghw_sweep([(3, 2, 2)], max_size=6, budget=10**5)))

    def test_invalid_pairs(self):
        with self.assertRaises(MonomialError):
            rghw(Q5U3, self.M2, self.M1, 1)
        with self.assertRaises(MonomialError):
            rghw(Q5U3, self.M1, self.M1, 1)
        with self.assertRaises(MonomialError):
            rghw(Q5U3, self.M1, self.M2, 2)
