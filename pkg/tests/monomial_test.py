from algebra.errors import MonomialError
from algebra.monomial import (
    Monomial,
    Order,
    StaircaseProfile,
    build_box,
    build_degree_set,
    build_onepoint_set,
    complement_set,
    delta_star,
    delta_star_closed_form,
    footprint_count,
    lex_prefix,
    maxcase_candidate,
    order_compare,
    shifted_region,
    tail_set,
    weight,
)
from algebra.params import CurveParams
from oracle.sweeps import closed_form_sweep

from .base_test import NormTraceTest, empty, monomials

Q3U1 = CurveParams(3, 2, 1)
Q3U2 = CurveParams(3, 2, 2)
Q3U4 = CurveParams(3, 2, 4)
Q5U3 = CurveParams(5, 2, 3)


class MonomialTest(NormTraceTest):
    """box, weighted order and footprint counts"""

    def test_parse(self):
        self.assertEqual(Monomial.parse("x2y1"), Monomial(2, 1))
        self.assertEqual(Monomial.parse("y3"), Monomial(0, 3))
        self.assertEqual(Monomial.parse("xy"), Monomial(1, 1))
        self.assertEqual(Monomial.parse("1"), Monomial(0, 0))
        self.assertEqual(str(Monomial(11, 3)), "x11y3")
        self.assertEqual((str(Monomial(1, 1)), str(Monomial(2, 0))), ("x1y1", "x2"))
        with self.assertRaises(MonomialError):
            Monomial.parse("z2")

    def test_weight_and_order(self):
        self.assertEqual(weight(Monomial(1, 1), Q5U3), 8)
        self.assertEqual(weight(Monomial(0, 0), Q5U3), 0)
        self.assertEqual(weight(Monomial(11, 3), Q5U3), 64)
        self.assertEqual(order_compare(Monomial(0, 1), Monomial(1, 0), Q5U3), Order.LT)
        self.assertEqual(order_compare(Monomial(2, 2), Monomial(2, 2), Q5U3), Order.EQ)
        # q=3, u=2: w(x^2) = w(y^3) = 6, ties broken by the y-exponent
        self.assertEqual(order_compare(Monomial(0, 3), Monomial(2, 0), Q3U2), Order.GT)

    def test_decreasing(self):
        self.assertTrue(monomials(Q5U3, [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1)]).is_decreasing)
        self.assertFalse(monomials(Q5U3, [(1, 1)]).is_decreasing)
        self.assertTrue(empty(Q5U3).is_decreasing)
        self.assertTrue(monomials(Q5U3, [(0, 0)]).is_decreasing)

    def test_sets(self):
        self.assertEqual(len(build_box(Q3U1)), 9)
        self.assertEqual(len(build_box(Q5U3)), 65)
        self.assertEqual(len(build_box(CurveParams(2, 3, 7))), 32)
        self.assertEqual(len(build_degree_set(Q3U1, 4)), 9)
        self.assertEqual(len(build_degree_set(Q3U2, 4)), 12)
        self.assertLabels(build_degree_set(Q3U2, 0), ["1"])
        self.assertEqual(build_onepoint_set(Q5U3, 8).labels(), ["1", "y1", "x1", "y2", "x1y1"])
        self.assertEqual(build_onepoint_set(Q5U3, 6).labels(), ["1", "y1", "x1", "y2"])
        self.assertLabels(build_onepoint_set(Q5U3, 0), ["1"])

    def test_complement(self):
        M1 = build_onepoint_set(Q5U3, 8)
        missing = build_box(Q5U3).difference(complement_set(M1))
        self.assertLabels(missing, ["x11y3", "x12y2", "x11y4", "x12y3", "x12y4"])
        self.assertEqual(len(complement_set(build_box(Q5U3))), 0)
        only_one = complement_set(monomials(Q5U3, [(0, 0)]))
        self.assertEqual(len(only_one), Q5U3.n - 1)
        self.assertNotIn(Monomial(12, 4), only_one)

    def test_footprint_count(self):
        self.assertEqual(footprint_count([(0, 3), (3, 0)], Q3U1), 9)
        self.assertEqual(footprint_count([(0, 3), (6, 0), (2, 2), (3, 1)], Q3U4), 11)
        self.assertEqual(footprint_count([(0, 5), (13, 0)], Q5U3), 65)
        count, members = footprint_count([(1, 0), (0, 1)], Q5U3, with_members=True)
        self.assertEqual((count, members), (1, [Monomial(0, 0)]))

    def test_delta_star(self):
        self.assertEqual(delta_star([(1, 1)], Q5U3), 8)
        self.assertEqual(delta_star([(11, 3)], Q5U3), 61)
        self.assertEqual(delta_star([(4, 0), (3, 1), (3, 0)], Q3U4), 9)
        self.assertEqual(delta_star([(0, 0)], Q5U3), 0)
        with self.assertRaises(MonomialError):
            delta_star([], Q5U3)
        with self.assertRaises(MonomialError):
            delta_star([(0, 5)], Q5U3)

    def test_closed_form(self):
        profile = StaircaseProfile(((2, 2), (3, 1)))
        self.assertEqual(delta_star_closed_form(profile, Q3U4), 11)
        self.assertEqual(delta_star(profile.corners, Q3U4), 11)
        for b in range(3):
            self.assertEqual(delta_star_closed_form(StaircaseProfile(((0, b),)), Q3U4), b * 4)
        with self.assertRaises(MonomialError):
            StaircaseProfile(((1, 1), (2, 1)))
        with self.assertRaises(MonomialError):
            delta_star_closed_form(StaircaseProfile(((0, 1), (2, 0))), Q3U2)

    def test_closed_form_sweep(self):
        checks = closed_form_sweep(count=1000, seed=7)
        self.assertEqual(len(checks), 1000)
        self.assertTrue(all(check.passed for check in checks), [c.detail for c in checks if not c.passed][:3])

    def test_lex_prefix(self):
        self.assertLabels(lex_prefix(build_degree_set(Q3U1, 4), 3, "x"), ["x2y2", "x2y1", "x2"])
        self.assertLabels(lex_prefix(build_degree_set(Q3U2, 4), 3, "x"), ["x4", "x3y1", "x3"])
        self.assertLabels(lex_prefix(shifted_region(Q3U4, 4, 2), 3, "y"), ["y2", "x1y1", "y1"])
        with self.assertRaises(MonomialError):
            lex_prefix(build_degree_set(Q3U1, 0), 2)

    def test_maxcase_pieces(self):
        self.assertLabels(maxcase_candidate(Q3U4, 4, 3, 2), ["x3y1", "x2y1", "x2y2"])
        self.assertLabels(tail_set(Q3U4, 6, 1), ["x5", "x5y1", "x6"])
        region = shifted_region(Q3U4, 4, 1)
        self.assertEqual(maxcase_candidate(Q3U4, 4, len(region), 1), region.shift(1))
        with self.assertRaises(MonomialError):
            maxcase_candidate(Q3U2, 4, 3, 0)
