"""Unit tests for phi-expansions, principal polygons and residual polynomials."""

import random
from math import comb

import pytest

from sextic_index.classes.IndexExceptions import (
    DegenerateInputError,
    InvalidSideError,
    IrrelevantModulusError,
    NonMonicModulusError,
)
from sextic_index.classes.NewtonPolygon import NewtonPolygon, Side
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import INFINITY
from sextic_index.modules.int_poly import trinomial_poly
from sextic_index.modules.phi_newton import (
    candidate_splittings,
    is_phi_regular,
    lower_hull,
    phi_expand,
    phi_index,
    polygon_from_points,
    polygon_vertices,
    principal_polygon,
    residual_polynomial,
    residue_field_of,
    side_residuals,
)


def _f(a: int, b: int) -> ZPoly:
    return trinomial_poly(Trinomial(a, b))


def _taylor(a: int, b: int, s: int, k: int) -> int:
    """k-th Taylor coefficient of x^6 + a*x^5 + b at s."""
    value = comb(6, k) * s ** (6 - k)
    if k <= 5:
        value += a * comb(5, k) * s ** (5 - k)
    if k == 0:
        value += b
    return value


class TestExpansion:
    """Digits of F in powers of phi."""

    def test_taylor_digits_at_three(self):
        expansion = phi_expand(_f(18, 33), ZPoly.linear(3), 2)
        assert len(expansion.digits) == 7
        assert expansion.digits[0] == ZPoly((5136,))
        assert expansion.digits[1] == ZPoly((8748,))
        assert expansion.digits[2] == ZPoly((6075,))
        assert expansion.valuations[:3] == (4, 2, 0)

    def test_taylor_digits_at_eight(self):
        expansion = phi_expand(_f(-42, -1258), ZPoly.linear(8), 3)
        assert [digit.coeffs for digit in expansion.digits[:4]] == [
            (-1115370,),
            (-663552,),
            (-153600,),
            (-16640,),
        ]

    @pytest.mark.parametrize("seed", range(50))
    def test_linear_digits_are_taylor_coefficients(self, seed):
        rng = random.Random(seed)
        a = rng.randint(-500, 500)
        b = rng.choice((-1, 1)) * rng.randint(1, 10**5)
        s = rng.randint(-40, 40)
        expansion = phi_expand(_f(a, b), ZPoly.linear(s), rng.choice((2, 3, 5)))
        assert len(expansion.digits) == 7
        assert all(digit.degree <= 0 for digit in expansion.digits)
        values = [digit(0) for digit in expansion.digits]
        assert values[0] == s**6 + a * s**5 + b
        assert values[1] == 6 * s**5 + 5 * a * s**4
        assert values == [_taylor(a, b, s, k) for k in range(7)]

    def test_digits_rebuild_the_polynomial(self):
        f = _f(-42, -1258)
        phi = ZPoly((1, 1, 1))
        expansion = phi_expand(f, phi, 2)
        assert expansion.reconstruct() == f
        assert all(digit.degree < 2 for digit in expansion.digits)

    def test_zero_digit_has_infinite_valuation(self):
        expansion = phi_expand(_f(0, 2), ZPoly.x(), 2)
        assert expansion.valuations == (1, INFINITY, INFINITY, INFINITY, INFINITY, INFINITY, 0)

    def test_non_monic_phi(self):
        with pytest.raises(NonMonicModulusError):
            phi_expand(_f(18, 33), ZPoly((1, 2)), 2)

    def test_constant_phi(self):
        with pytest.raises(DegenerateInputError):
            phi_expand(_f(18, 33), ZPoly((1,)), 2)


class TestPolygon:
    """Lower hull and the principal (negative-slope) part."""

    def test_collinear_points_merge(self):
        assert lower_hull([(0, 4), (1, 2), (2, 0)]) == [(0, 4), (2, 0)]

    def test_infinite_points_are_ignored(self):
        polygon = polygon_from_points([(0, 3), (1, INFINITY), (2, 1), (3, 0)])
        assert polygon.vertices == [(0, 3), (3, 0)]

    def test_non_negative_slopes_are_dropped(self):
        polygon = polygon_from_points([(0, 2), (1, 0), (2, 0), (3, 1)])
        assert polygon.vertices == [(0, 2), (1, 0)]

    def test_three_sided_polygon(self):
        polygon = principal_polygon(phi_expand(_f(-42, -1258), ZPoly.linear(8), 3))
        assert polygon.vertices == [(0, 8), (1, 4), (2, 1), (3, 0)]
        assert [side.slope_height for side in polygon.sides] == [4, 3, 1]

    def test_eisenstein_polygon(self):
        polygon = principal_polygon(phi_expand(_f(0, 2), ZPoly.x(), 2))
        assert polygon.vertices == [(0, 1), (6, 0)]
        assert polygon.sides[0].ramification == 6
        assert polygon.sides[0].degree == 1

    def test_vertices_left_to_right(self):
        polygon = principal_polygon(phi_expand(_f(18, 33), ZPoly.linear(3), 2))
        assert polygon_vertices(polygon) == [(0, 4), (2, 0)]
        assert polygon_vertices(NewtonPolygon(())) == []

    def test_sides_must_be_contiguous(self):
        with pytest.raises(InvalidSideError):
            NewtonPolygon((Side((0, 4), (1, 2)), Side((2, 1), (3, 0))))


class TestIndex:
    """ind_phi as a lattice-point count."""

    def test_single_side(self):
        polygon = polygon_from_points([(0, 4), (1, 2), (2, 0)])
        assert phi_index(polygon, 1) == 2
        assert phi_index(polygon, 2) == 4

    def test_three_sides(self):
        polygon = polygon_from_points([(0, 8), (1, 4), (2, 1), (3, 0)])
        assert phi_index(polygon, 1) == 5

    def test_height_one_side_has_no_points(self):
        polygon = polygon_from_points([(0, 1), (6, 0)])
        assert phi_index(polygon, 1) == 0

    def test_empty_polygon(self):
        assert phi_index(NewtonPolygon(()), 1) == 0


class TestResiduals:
    """Residual polynomials and phi-regularity."""

    def test_regular_at_three(self):
        f, phi = _f(18, 33), ZPoly.linear(3)
        expansion = phi_expand(f, phi, 2)
        polygon = principal_polygon(expansion)
        (item,) = side_residuals(expansion, polygon)
        assert item.residual.degree == 2
        assert item.separable
        # y^2 + y + 1 is irreducible over F_2
        assert [(psi.degree, m) for psi, m in item.factors] == [(2, 1)]
        assert is_phi_regular(f, phi, 2)

    def test_irregular_at_one(self):
        f, phi = _f(18, 33), ZPoly.linear(1)
        expansion = phi_expand(f, phi, 2)
        polygon = principal_polygon(expansion)
        assert polygon.vertices == [(0, 2), (2, 0)]
        residual = residual_polynomial(expansion, polygon.sides[0])
        # y^2 + 1 = (y + 1)^2: the point (1, 5) lies above the side
        assert [c.is_zero for c in residual.coeffs] == [False, True, False]
        assert not is_phi_regular(f, phi, 2)

    def test_side_off_the_polygon(self):
        expansion = phi_expand(_f(18, 33), ZPoly.linear(3), 2)
        with pytest.raises(InvalidSideError):
            residual_polynomial(expansion, Side((0, 4), (1, 2)))

    def test_phi_must_divide_f(self):
        with pytest.raises(IrrelevantModulusError):
            is_phi_regular(_f(18, 33), ZPoly.x(), 2)

    def test_reducible_phi(self):
        with pytest.raises(IrrelevantModulusError):
            residue_field_of(ZPoly((1, 0, 1)), 2)

    def test_non_monic_modulus(self):
        with pytest.raises(NonMonicModulusError):
            residue_field_of(ZPoly((1, 2)), 3)


class TestResidualRows:
    """
    Residuals of the single side (0, 3)-(3, 0) at 3, one (a, b) per row of the
    two residual tables: phi = x + 1 when b = a - 1 and phi = x - 1 when b = -a - 1.
    """

    @staticmethod
    def _residual(a: int, b: int, shift: int):
        expansion = phi_expand(_f(a, b), ZPoly((shift, 1)), 3)
        polygon = principal_polygon(expansion)
        assert polygon.vertices == [(0, 3), (3, 0)]
        (item,) = side_residuals(expansion, polygon)
        coeffs = [c.value.coefficient(0) for c in item.residual.coeffs]
        return item, coeffs

    @pytest.mark.parametrize(
        "a, b, degrees",
        [
            (3, 29, [(1, 1), (2, 1)]),  # (y + 1)(y^2 + 1)
            (3, -25, [(3, 1)]),  # y^3 + y^2 + y - 1
            (21, 47, [(3, 1)]),  # y^3 + y^2 - y + 1
            (21, -7, [(1, 1), (1, 2)]),  # (y + 1)^2 (y - 1)
            (12, 38, [(1, 1), (2, 1)]),  # (y^2 - y - 1)(y - 1)
            (12, -16, [(3, 1)]),  # y^3 + y^2 - 1
        ],
    )
    def test_plus_one_rows(self, a, b, degrees):
        item, coeffs = self._residual(a, b, 1)
        # y^3 + y^2 + (5a - 6)_3 y + (-a + b + 1)_3, the linear term vanishing when 27 | 5a - 6
        assert coeffs == [((-a + b + 1) // 27) % 3, ((5 * a - 6) // 9) % 3, 1, 1]
        assert sorted((psi.degree, m) for psi, m in item.factors) == degrees
        assert item.separable == all(m == 1 for _, m in degrees)

    @pytest.mark.parametrize(
        "a, b, degrees",
        [
            (6, 20, [(3, 1)]),  # -y^3 + y^2 + y + 1
            (6, -34, [(1, 1), (1, 2)]),  # -(y - 1)^2 (y + 1)
            (24, 2, [(1, 1), (2, 1)]),  # -(y - 1)(y^2 + 1)
            (24, -52, [(3, 1)]),  # -y^3 + y^2 - y - 1
            (15, 11, [(1, 1), (2, 1)]),  # -(y^2 + y - 1)(y + 1)
            (15, -43, [(3, 1)]),  # -y^3 + y^2 - 1
        ],
    )
    def test_minus_one_rows(self, a, b, degrees):
        item, coeffs = self._residual(a, b, -1)
        # -y^3 + y^2 + (5a + 6)_3 y + (a + b + 1)_3
        assert coeffs == [((a + b + 1) // 27) % 3, ((5 * a + 6) // 9) % 3, 1, 2]
        assert sorted((psi.degree, m) for psi, m in item.factors) == degrees
        assert item.separable == all(m == 1 for _, m in degrees)


class TestCandidateSplittings:
    """Splittings an irregular side may contribute."""

    def test_degree_two_side(self):
        result = candidate_splittings(Side((0, 2), (2, 0)), 1)
        assert {s.entries for s in result} == {((1, 2),), ((2, 1),), ((1, 1), (1, 1))}
        assert len(result[0].entries) == 1

    def test_ramification_divides_every_entry(self):
        for splitting in candidate_splittings(Side((0, 2), (4, 0)), 1):
            assert all(e % 2 == 0 for e, _ in splitting.entries)
            assert splitting.degree == 4


if __name__ == "__main__":
    pytest.main([__file__])
