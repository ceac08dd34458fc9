import pytest

import numpy as np
from scipy.spatial import ConvexHull

from knotram.engine.knotpoly import (
    BiPoly,
    alexander,
    cheb_phi,
    f_poly,
    g_poly,
    h_poly,
    newton_cert,
    newton_certificate,
    newton_polygon,
    validate_structure,
)
from knotram.engine.poly_core import IntPoly


ODD_T = list(range(3, 32, 2))


class TestChebPhi:
    @staticmethod
    @pytest.mark.parametrize(
        "i,coeffs",
        [
            (0, []),
            (1, [1]),
            (2, [1]),
            (3, [-1, 1]),
            (5, [-1, -1, 1]),
            (-5, [-1, -1, 1]),
            (-1, [1]),
            (-4, [0, -1]),
        ],
    )
    def test_examples(i, coeffs):
        assert cheb_phi(i).poly == IntPoly(coeffs)

    @staticmethod
    @pytest.mark.parametrize("i", range(-40, 39))
    def test_recurrence(i):
        u = IntPoly.x("u")
        lhs = cheb_phi(i + 2).poly
        rhs = u * cheb_phi(i).poly - cheb_phi(i - 2).poly
        assert lhs == rhs

    @staticmethod
    @pytest.mark.parametrize("i", range(1, 60))
    def test_symmetry_and_degree(i):
        sign = 1 if (i + 1) % 2 == 0 else -1
        assert cheb_phi(i).poly == sign * cheb_phi(-i).poly
        expected_degree = (i - 1) // 2
        assert cheb_phi(i).poly.degree == expected_degree
        assert cheb_phi(-i).poly.degree == expected_degree


class TestBiPoly:
    @staticmethod
    def test_zero_coefficients_dropped():
        p = BiPoly({(0, 0): 1, (1, 1): 0, (2, 0): 3}, var2="Y")
        assert p.exponents() == [(0, 0), (2, 0)]
        assert p.bidegree == (2, 0)
        assert (p - p).terms == []

    @staticmethod
    def test_substitute_and_lift():
        # F = R + Z: Z^1 F(R, Z + 1/Z) = R Z + Z^2 + 1
        F = BiPoly({(1, 0): 1, (0, 1): 1}, var2="Z")
        assert F.laurent_lift() == BiPoly(
            {(1, 1): 1, (0, 2): 1, (0, 0): 1}, var2="Z"
        )
        G = F.substitute(IntPoly([-2, 0, 1], var="Z"))
        assert G == BiPoly({(1, 0): 1, (0, 0): -2, (0, 2): 1}, var2="Z")

    @staticmethod
    def test_evaluations():
        F = BiPoly({(2, 1): 3, (0, 0): -1}, var2="Z")
        assert F.evaluate_r(2) == IntPoly([-1, 12], var="Z")
        assert F.evaluate_second(2) == IntPoly([-1, 0, 6], var="R")
        assert F.scale_second(3).exponents() == [(0, 0), (2, 3)]

    @staticmethod
    def test_serialization():
        F = f_poly(5)
        G = BiPoly.from_dict(F.as_dict())
        assert G == F


class TestHPoly:
    @staticmethod
    def test_t3():
        expected = BiPoly(
            {(2, 1): -1, (3, 0): 1, (1, 1): 1, (2, 0): -1, (0, 0): -1},
            var2="Y",
        )
        assert h_poly(3) == expected

    @staticmethod
    def test_t5_constant():
        assert h_poly(5).evaluate_r(0) == IntPoly([-1, -1], var="Y")

    @staticmethod
    def test_t29_leading():
        h = h_poly(29)
        assert h[(29, 0)] == 1
        assert h[(28, 1)] == -1

    @staticmethod
    @pytest.mark.parametrize("t", [1, 2, 4, -3])
    def test_invalid(t):
        with pytest.raises(ValueError):
            h_poly(t)


class TestFPoly:
    @staticmethod
    def test_t3():
        expected = BiPoly(
            {
                (3, 0): 1,
                (2, 0): 1,
                (2, 2): -1,
                (1, 2): 1,
                (1, 0): -2,
                (0, 0): -1,
            },
            var2="Z",
        )
        assert f_poly(3) == expected

    @staticmethod
    def test_t29_display():
        f = f_poly(29)
        assert f[(29, 0)] == 1
        assert f[(28, 2)] == -1
        assert f[(27, 2)] == 1
        assert f[(0, 2)] == -1
        assert f[(1, 0)] == 15
        assert f[(0, 0)] == 1

    @staticmethod
    @pytest.mark.parametrize("t", ODD_T)
    def test_shape(t):
        f = f_poly(t)
        Z = IntPoly.x("Z")
        assert f.bidegree == (t, 2)
        assert all(j % 2 == 0 for _, j in f.exponents())
        assert f.coeff_in_r(t) == 1
        assert f.coeff_in_r(t - 1) == 1 - Z * Z
        if t % 4 == 1:
            assert f.coeff_in_r(0) == 1 - Z * Z
        else:
            assert f.coeff_in_r(0) == -1


class TestGPoly:
    @staticmethod
    def test_t3():
        expected = BiPoly(
            {
                (3, 2): 1,
                (2, 4): -1,
                (2, 2): -1,
                (2, 0): -1,
                (1, 4): 1,
                (1, 0): 1,
                (0, 2): -1,
            },
            var2="Z",
        )
        assert g_poly(3) == expected

    @staticmethod
    def test_t5_constant():
        assert g_poly(5).coeff_in_r(0) == IntPoly([-1, 0, -1, 0, -1])

    @staticmethod
    @pytest.mark.parametrize("t", ODD_T)
    def test_specialization(t):
        assert g_poly(t).evaluate_second(1) == f_poly(t).evaluate_second(2)

    @staticmethod
    @pytest.mark.parametrize("t", ODD_T)
    def test_laurent_identity(t):
        a = (t + 1) // 2
        delta_sq = IntPoly([a, 0, -t, 0, a], var="Z")
        assert (g_poly(t).evaluate_r(2) + delta_sq).is_zero


class TestAlexander:
    @staticmethod
    def test_examples():
        assert alexander(29) == IntPoly([15, -29, 15])
        assert alexander(3) == IntPoly([2, -3, 2])

    @staticmethod
    @pytest.mark.parametrize("t", ODD_T)
    def test_at_one(t):
        assert alexander(t)(1) == 1


class TestValidateStructure:
    @staticmethod
    @pytest.mark.parametrize("t", ODD_T)
    def test_passes(t):
        report = validate_structure(t)
        assert report.passed
        assert report.failures == []
        assert len(report.checks) == 8

    @staticmethod
    def test_record():
        record = validate_structure(29).to_record()
        assert record["passed"]
        names = [check["name"] for check in record["checks"]]
        assert "laurent_identity" in names

    @staticmethod
    def test_separable_detail():
        checks = {c["name"]: c for c in validate_structure(3).checks}
        separable = checks["separable_alexander"]
        assert separable["passed"]
        assert separable["detail"] == "Res(Delta, Delta') = 14"

    @staticmethod
    def test_invalid():
        with pytest.raises(ValueError):
            validate_structure(4)


class TestNewton:
    @staticmethod
    def test_polygon_square():
        points = [(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1)]
        assert newton_polygon(points) == [(0, 0), (2, 0), (2, 2), (0, 2)]

    @staticmethod
    def test_polygon_degenerate():
        assert newton_polygon([(1, 1), (1, 1)]) == [(1, 1)]

    @staticmethod
    @pytest.mark.parametrize(
        "t,m,top",
        [
            (13, 1, [(0, 12), (2, 13), (4, 12)]),
            (29, 5, [(0, 28), (10, 29), (20, 28)]),
            (3, 1, [(0, 2), (2, 3), (4, 2)]),
        ],
    )
    def test_top_vertices(t, m, top):
        cert = newton_certificate(t, m)
        assert cert.top_vertices == top
        assert cert.top_vertices_ok
        assert cert.certified
        assert newton_cert(t, m)

    @staticmethod
    @pytest.mark.parametrize("t", [3, 5, 7, 9, 11])
    def test_all_m(t):
        assert all(newton_cert(t, m) for m in range(1, t + 1))

    @staticmethod
    @pytest.mark.slow
    @pytest.mark.parametrize("t", range(13, 30, 2))
    def test_all_m_large_t(t):
        assert all(newton_cert(t, m) for m in range(1, t + 1))

    @staticmethod
    @pytest.mark.parametrize("t,m", [(3, 1), (7, 2), (13, 1), (29, 5)])
    def test_against_scipy(t, m):
        g = g_poly(t).scale_second(m)
        points = np.array([(j, i) for i, j in g.exponents()], dtype=float)
        hull = ConvexHull(points)
        expected = {tuple(int(x) for x in points[ii]) for ii in hull.vertices}
        assert set(newton_certificate(t, m).vertices) == expected
