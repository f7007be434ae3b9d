"""Unit tests for the brute-force oracles and the verification facade."""

import random

import pytest

from sextic_index.classes.IndexExceptions import FragmentMissError, TooLargeError
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import INDEX_PRIMES, INFINITY, REFERENCE_EXAMPLES
from sextic_index.modules.finite_field import count_monic_irreducibles
from sextic_index.modules.index_classifier import (
    engstrom_exponent,
    index_of_field,
    is_index_divisor,
    splitting_outcome,
    theorem1_local_condition,
)
from sextic_index.modules.int_poly import (
    is_irreducible,
    is_reduced,
    trinomial_discriminant,
    trinomial_poly,
)
from sextic_index.modules.oracle import (
    bounded_factor_search,
    dedekind_divides,
    discriminant_resultant,
    hull_bruteforce,
    irreducible_count_bruteforce,
    lattice_index_bruteforce,
    verify_report,
)
from sextic_index.modules.phi_newton import phi_index, polygon_from_points


def _f(a: int, b: int) -> ZPoly:
    return trinomial_poly(Trinomial(a, b))


class TestDedekind:
    """Dedekind's criterion at a single prime."""

    def test_eisenstein_prime(self):
        assert not dedekind_divides(_f(0, 2), 2)

    def test_two_divides(self):
        # T = x^3 - 1 shares x^3 + 1 with g and h mod 2
        assert dedekind_divides(_f(0, 3), 2)

    def test_zero_remainder(self):
        # x^6 + x^5 + 3125 = x^5 (x + 1) + 5^5
        assert dedekind_divides(_f(1, 3125), 5)

    def test_squarefree_reduction(self):
        assert not dedekind_divides(_f(0, 2), 7)


class TestGeometry:
    """Gift wrapping and lattice counting against the fast routes."""

    @pytest.mark.parametrize(
        "points",
        [
            [(0, 4), (1, 2), (2, 0)],
            [(0, 3), (1, INFINITY), (2, 1), (3, 0)],
            [(0, 2), (1, 0), (2, 0), (3, 1)],
            [(0, 8), (1, 4), (2, 1), (3, 0), (4, 0), (5, 2), (6, 0)],
            [(0, 5), (1, 4), (2, 4), (3, 1), (4, 2), (5, 0)],
        ],
    )
    def test_hull_matches(self, points):
        fast = polygon_from_points(points)
        slow = hull_bruteforce(points)
        assert slow.vertices == fast.vertices
        assert lattice_index_bruteforce(slow, 1) == phi_index(fast, 1)

    def test_lattice_count_scales_with_degree(self):
        polygon = polygon_from_points([(0, 4), (1, 2), (2, 0)])
        assert lattice_index_bruteforce(polygon, 2) == 4

    def test_single_point(self):
        assert hull_bruteforce([(0, 3)]).is_empty

    @pytest.mark.parametrize("count", [500, pytest.param(10**4, marks=pytest.mark.slow)])
    def test_random_valuation_vectors(self, count):
        rng = random.Random(2024)
        for _ in range(count):
            points = [(0, rng.randint(1, 12))]
            points += [
                (i, INFINITY if rng.random() < 0.2 else rng.randint(0, 12))
                for i in range(1, 6)
            ]
            points.append((6, 0))
            fast = polygon_from_points(points)
            slow = hull_bruteforce(points)
            assert slow.vertices == fast.vertices, points
            assert lattice_index_bruteforce(slow, 1) == phi_index(fast, 1), points


class TestFormulas:
    """Discriminant, necklace counts and bounded factor search."""

    @pytest.mark.parametrize("pair", [(0, 1), (18, 33), (-42, -1258), (1, 3125)])
    def test_discriminant(self, pair):
        assert discriminant_resultant(Trinomial(*pair)) == trinomial_discriminant(*pair)

    @pytest.mark.parametrize("count", [50, pytest.param(10**4, marks=pytest.mark.slow)])
    def test_discriminant_at_random(self, count):
        rng = random.Random(7)
        for _ in range(count):
            a = rng.randint(-10**4, 10**4)
            b = rng.choice([-1, 1]) * rng.randint(1, 10**4)
            assert discriminant_resultant(Trinomial(a, b)) == trinomial_discriminant(a, b)

    @pytest.mark.parametrize("p, f", [(2, 1), (2, 4), (2, 6), (3, 2), (3, 3), (5, 2)])
    def test_necklace_counts(self, p, f):
        assert irreducible_count_bruteforce(p, f) == count_monic_irreducibles(p, f)

    def test_enumeration_limit(self):
        with pytest.raises(TooLargeError):
            irreducible_count_bruteforce(7, 6)

    def test_factor_found(self):
        for pair in [(0, 1), (0, -4), (1, -2)]:
            t = Trinomial(*pair)
            factor = bounded_factor_search(t)
            assert factor is not None
            assert trinomial_poly(t).exact_quotient(factor) is not None

    def test_no_factor(self):
        assert bounded_factor_search(Trinomial(18, 33)) is None
        assert bounded_factor_search(Trinomial(0, 2)) is None


def _box(bound: int, reduced_only: bool = True):
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if b == 0:
                continue
            t = Trinomial(a, b)
            if not reduced_only or (is_reduced(t) and is_irreducible(t)):
                yield t


class TestBoxAgreement:
    """Fast routes against the references over every small (a, b)."""

    @pytest.mark.parametrize("bound", [8, pytest.param(25, marks=pytest.mark.slow)])
    def test_splitting_covers_degree_six(self, bound):
        for t in _box(bound):
            for p in INDEX_PRIMES:
                outcome = splitting_outcome(t, p)
                if outcome.regular:
                    assert outcome.splitting.degree == 6, (str(t), p)

    @pytest.mark.parametrize("bound", [8, pytest.param(25, marks=pytest.mark.slow)])
    def test_dedekind_matches_local_condition(self, bound):
        for t in _box(bound):
            f = trinomial_poly(t)
            for p in (2, 3, 5, 7):
                assert dedekind_divides(f, p) == (not theorem1_local_condition(t, p)), (
                    str(t),
                    p,
                )

    @pytest.mark.parametrize("bound", [8, pytest.param(25, marks=pytest.mark.slow)])
    def test_congruences_match_splitting(self, bound):
        for t in _box(bound):
            report = index_of_field(t)
            for p, exponent in ((2, report.nu2), (3, report.nu3)):
                splitting = report.splitting_at[p]
                if not splitting.determined:
                    continue
                assert is_index_divisor(splitting, p) == (exponent >= 1), (str(t), p)
                try:
                    assert engstrom_exponent(splitting, p) == exponent, (str(t), p)
                except FragmentMissError:
                    pass

    @pytest.mark.parametrize("bound", [10, pytest.param(50, marks=pytest.mark.slow)])
    def test_irreducibility_matches_factor_search(self, bound):
        for t in _box(bound, reduced_only=False):
            assert is_irreducible(t) == (bounded_factor_search(t) is None), str(t)


class TestVerifyReport:
    """Every cross-check agrees on the reference fields."""

    @pytest.mark.parametrize("pair", [pair for pair, _ in REFERENCE_EXAMPLES])
    def test_reference_fields(self, pair):
        t = Trinomial(*pair)
        verdicts = verify_report(t, index_of_field(t))
        disagreements = [v.to_document() for v in verdicts if not v.agrees]
        assert disagreements == []
        contexts = {v.context.split()[0] for v in verdicts}
        assert {"dedekind", "hull", "lattice"} <= contexts


if __name__ == "__main__":
    pytest.main([__file__])
