import numpy as np

from algebra.curve import curve_stats, gamma_classes, x_fiber, y_fiber
from algebra.errors import CurveError
from algebra.field import build_extension
from algebra.curve import enumerate_points

from .base_test import NormTraceTest, curve


class CurveTest(NormTraceTest):
    """affine points of x^u = Tr(y)"""

    def test_point_counts(self):
        for (q, s, u), n in {(3, 2, 2): 15, (5, 2, 3): 65, (2, 3, 7): 32, (2, 2, 1): 4}.items():
            self.assertEqual(curve(q, s, u).n, n)

    def test_points_satisfy_equation(self):
        X = curve(3, 2, 4)
        field = X.field
        traces = X.y + X.y**field.q
        self.assertTrue(np.all(X.x**X.u == traces))
        self.assertEqual(len(set(X.points)), X.n)

    def test_gamma_classes(self):
        X = curve(2, 2, 3)
        classes = gamma_classes(X)
        self.assertEqual(len(classes), 2)
        # gamma = 0 contributes the single root x = 0 times q^(s-1) betas
        self.assertEqual(len(classes[0]), 2)
        self.assertEqual(sum(len(points) for points in classes.values()), X.n)

    def test_stats(self):
        self.assertEqual(curve_stats(curve(3, 2, 2)), {"n": 15, "genus": 4})
        self.assertEqual(curve_stats(curve(2, 2, 3))["genus"], 3)
        self.assertEqual(curve_stats(curve(3, 2, 1))["genus"], 0)

    def test_fibers(self):
        X = curve(2, 2, 1)
        self.assertEqual(len(x_fiber(X, 0)), 2)
        for beta in range(X.field.order):
            self.assertEqual(len(y_fiber(X, beta)), 1)

    def test_divisibility(self):
        with self.assertRaises(CurveError):
            enumerate_points(build_extension(3, 1, 2), 3)
