import numpy as np

from algebra.errors import CurveError, FieldError
from algebra.field import build_extension, field_arith, frobenius, norm, split_prime_power, trace
from algebra.params import CurveParams

from .base_test import NormTraceTest


class FieldTest(NormTraceTest):
    """GF(q^s) construction, trace and norm"""

    def test_orders(self):
        for (p, a, s), order in {(3, 1, 2): 9, (5, 1, 2): 25, (2, 1, 3): 8, (2, 2, 2): 16}.items():
            self.assertEqual(build_extension(p, a, s).order, order)

    def test_arith(self):
        field = build_extension(3, 1, 2)
        one = field.element(1)
        self.assertEqual(int(field_arith(one, one, "add")), 2)

        gf8 = build_extension(2, 1, 3)
        nonzero = gf8.elements()[1:]
        self.assertTrue(np.all(field_arith(nonzero, field_arith(nonzero, -1, "pow"), "mul") == 1))
        everything = gf8.elements()
        self.assertTrue(np.array_equal(frobenius(gf8, everything, gf8.s), everything))

    def test_mixed_fields(self):
        a = build_extension(3, 1, 2).element(1)
        b = build_extension(2, 1, 3).element(1)
        with self.assertRaises(FieldError):
            field_arith(a, b, "add")
        with self.assertRaises(FieldError):
            field_arith(a, a - a, "div")

    def test_trace_and_norm(self):
        for p, a, s in [(3, 1, 2), (2, 2, 2), (2, 1, 3)]:
            field = build_extension(p, a, s)
            els = field.elements()
            traces, norms = trace(field, els), norm(field, els)
            # both land in GF(q)
            self.assertTrue(np.all(traces**field.q == traces))
            self.assertTrue(np.all(norms**field.q == norms))
            self.assertEqual(int(traces[0]), 0)
            self.assertEqual(int(norm(field, field.element(1))), 1)
            # every value of the trace is taken q^(s-1) times
            counts = np.bincount(field.codes(traces), minlength=field.order)
            self.assertTrue(all(counts[g] == field.q ** (s - 1) for g in field.codes(field.subfield)))

    def test_modulus(self):
        field = build_extension(2, 1, 3, modulus=[1, 0, 1, 1])
        self.assertEqual(field.modulus, (1, 0, 1, 1))
        with self.assertRaises(FieldError):
            build_extension(2, 1, 2, modulus=[1, 0, 1])
        with self.assertRaises(FieldError):
            build_extension(4, 1, 2)
        with self.assertRaises(FieldError):
            build_extension(3, 1, 1)

    def test_split_prime_power(self):
        self.assertEqual(split_prime_power(4), (2, 2))
        self.assertEqual(split_prime_power(27), (3, 3))
        self.assertEqual(split_prime_power(5), (5, 1))
        with self.assertRaises(FieldError):
            split_prime_power(6)

    def test_curve_params(self):
        params = CurveParams(5, 2, 3)
        self.assertEqual((params.n, params.x_max, params.y_bound, params.genus), (65, 12, 5, 24))
        self.assertTrue(CurveParams(3, 2, 4).is_maximal)
        with self.assertRaises(CurveError):
            CurveParams(7, 2, 5)
        with self.assertRaises(CurveError):
            CurveParams(6, 2, 1)
