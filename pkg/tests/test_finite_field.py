"""Unit tests for factorisation and counting over F_p and residue fields."""

import pytest

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import InvalidPrimeError, ZeroInputError
from sextic_index.classes.ResidueField import ResidueField, ResidueFieldPoly
from sextic_index.modules.finite_field import (
    count_monic_irreducibles,
    fp_derivative,
    fp_distinct_degree,
    fp_factor,
    fp_gcd,
    fp_is_irreducible,
    fp_is_squarefree,
    fp_radical,
    monic_polynomials,
    residue_factor,
)


def _fp(p: int, *coeffs: int) -> FpPoly:
    return FpPoly(p, coeffs)


class TestFpPoly:
    """Normalisation and arithmetic in F_p[x]."""

    def test_coefficients_are_reduced(self):
        assert _fp(3, 4, -1, 3).coeffs == (1, 2)

    def test_divmod(self):
        q, r = divmod(_fp(2, 1, 0, 0, 0, 0, 0, 1), _fp(2, 1, 1))
        assert r.is_zero
        assert q * _fp(2, 1, 1) == _fp(2, 1, 0, 0, 0, 0, 0, 1)

    def test_derivative(self):
        # 1 + 2x + 3x^2 is 1 + 2x over F_3
        assert fp_derivative(_fp(3, 1, 2, 3)).coeffs == (2,)
        assert fp_derivative(_fp(5, 1, 1, 0, 1)).coeffs == (1, 0, 3)
        assert fp_derivative(_fp(2, 1, 0, 1)).is_zero

    def test_gcd_is_monic(self):
        g = fp_gcd(_fp(5, 2, 2), _fp(5, 3, 0, 3))
        # 2(x + 1) and 3(x^2 + 1): x + 1 does not divide x^2 + 1 mod 5
        assert g == _fp(5, 1)
        assert fp_gcd(_fp(3, 1, 0, 1), _fp(3, 2, 0, 2)) == _fp(3, 1, 0, 1)


class TestFactorisation:
    """Complete factorisation, squarefreeness and the radical."""

    def test_x6_plus_1_mod_2(self):
        factors = fp_factor(_fp(2, 1, 0, 0, 0, 0, 0, 1))
        assert factors == [(_fp(2, 1, 1), 2), (_fp(2, 1, 1, 1), 2)]

    def test_x6_minus_1_mod_3(self):
        factors = fp_factor(_fp(3, -1, 0, 0, 0, 0, 0, 1))
        assert factors == [(_fp(3, 1, 1), 3), (_fp(3, 2, 1), 3)]

    def test_factors_multiply_back(self):
        f = _fp(5, 3, 0, 0, 0, 0, 1, 1)
        product = _fp(5, 1)
        for factor, multiplicity in fp_factor(f):
            assert fp_is_irreducible(factor)
            for _ in range(multiplicity):
                product = product * factor
        assert product == f

    def test_zero_polynomial(self):
        with pytest.raises(ZeroInputError):
            fp_factor(FpPoly(2))

    def test_non_prime_modulus(self):
        with pytest.raises(InvalidPrimeError):
            fp_factor(_fp(4, 1, 1))

    def test_squarefree(self):
        assert fp_is_squarefree(_fp(7, 2, 0, 0, 0, 0, 0, 1))
        assert not fp_is_squarefree(_fp(2, 1, 0, 1))
        # derivative vanishes: x^3 + 1 = (x + 1)^3 mod 3
        assert not fp_is_squarefree(_fp(3, 1, 0, 0, 1))

    def test_radical(self):
        assert fp_radical(_fp(2, 1, 0, 0, 0, 0, 0, 1)) == _fp(2, 1, 0, 0, 1)
        assert fp_radical(_fp(7, 1, 2, 1)) == _fp(7, 1, 1)

    def test_distinct_degree(self):
        # x^6 + 2 mod 7: x^6 = 5 has no root since x^6 = 1 on F_7^*
        parts = fp_distinct_degree(_fp(7, 2, 0, 0, 0, 0, 0, 1))
        assert sum(d * n for d, n in parts) == 6
        assert all(d > 1 for d, _ in parts)

    def test_irreducibility(self):
        assert fp_is_irreducible(_fp(2, 1, 1, 1))
        assert not fp_is_irreducible(_fp(2, 1, 0, 1))
        assert fp_is_irreducible(_fp(3, 1, 0, 1))


class TestResidueField:
    """Factorisation over F_p[x]/(phi)."""

    def test_field_size(self):
        field = ResidueField(_fp(2, 1, 1, 1))
        assert field.size == 4
        assert len(list(field.elements())) == 4

    def test_y2_plus_y_plus_1_splits_over_f4(self):
        field = ResidueField(_fp(2, 1, 1, 1))
        r = ResidueFieldPoly(field, (field.one(), field.one(), field.one()))
        factors = residue_factor(r)
        assert [f.degree for f, _ in factors] == [1, 1]
        assert all(m == 1 for _, m in factors)

    def test_y5_plus_1_over_f2(self):
        # (y + 1)(y^4 + y^3 + y^2 + y + 1): 2 has order 4 modulo 5
        field = ResidueField(_fp(2, 0, 1))
        r = ResidueFieldPoly(field, (1, 0, 0, 0, 0, 1))
        assert [(f.degree, m) for f, m in residue_factor(r)] == [(1, 1), (4, 1)]

    def test_irreducible_quadratic_over_f4(self):
        # x y^2 + (x + 1) y + x, i.e. y^2 + x y + 1 after scaling, has no root in F_4
        field = ResidueField(_fp(2, 1, 1, 1))
        x = field.element(_fp(2, 0, 1))
        r = ResidueFieldPoly(field, (x, field.element(_fp(2, 1, 1)), x))
        factors = residue_factor(r)
        assert [(f.degree, m) for f, m in factors] == [(2, 1)]
        assert factors[0][0].leading == field.one()

    def test_repeated_root(self):
        field = ResidueField(_fp(2, 1, 1))
        r = ResidueFieldPoly(field, (1, 0, 1))
        assert [(f.degree, m) for f, m in residue_factor(r)] == [(1, 2)]


class TestCounting:
    """Necklace counts N_f."""

    @pytest.mark.parametrize(
        "p, f, expected",
        [(2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 6, 9), (3, 2, 3), (5, 1, 5), (5, 2, 10)],
    )
    def test_known_counts(self, p, f, expected):
        assert count_monic_irreducibles(p, f) == expected

    def test_matches_enumeration(self):
        for f in (1, 2, 3):
            irreducible = [g for g in monic_polynomials(3, f) if fp_is_irreducible(g)]
            assert len(irreducible) == count_monic_irreducibles(3, f)


if __name__ == "__main__":
    pytest.main([__file__])
