"""
Brute-force reference implementations behind the `--verify` flag.
`--verify` 使用的暴力参考实现。

Nothing here is used by the classifier itself; each function recomputes a
fast-path quantity by a slower, independent method.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt
from typing import Optional, Sequence

from sympy import divisors, primefactors

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import FragmentMissError, TooLargeError
from sextic_index.classes.IndexReport import IndexReport, OracleVerdict
from sextic_index.classes.NewtonPolygon import NewtonPolygon, Side
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import BRUTE_FORCE_FIELD_LIMIT, INDEX_PRIMES, INFINITY, Valuation
from sextic_index.modules.finite_field import (
    count_monic_irreducibles,
    fp_gcd,
    fp_radical,
    monic_polynomials,
)
from sextic_index.modules.index_classifier import (
    engstrom_exponent,
    is_index_divisor,
    splitting_outcome,
    theorem1_local_condition,
)
from sextic_index.modules.int_poly import discriminant, is_irreducible, trinomial_poly
from sextic_index.modules.utils import require_prime

# ----------------------------------------------------------------------
# Dedekind's criterion
# ----------------------------------------------------------------------


def dedekind_divides(f: ZPoly, p: int) -> bool:
    """
    Whether p divides (Z_K : Z[alpha]) by Dedekind's criterion.
    用 Dedekind 判据判断 p 是否整除 (Z_K : Z[alpha])。

    With g the radical of F mod p and h = (F mod p) / g, both lifted with
    coefficients in [0, p), T = (g*h - F) / p; p divides the index iff
    gcd(T, g, h) is nonconstant mod p.
    """
    require_prime(p)
    reduced = FpPoly.from_zpoly(f, p)
    g_bar = fp_radical(reduced)
    h_bar = reduced.monic() // g_bar
    g, h = g_bar.lift(), h_bar.lift()

    difference = g * h - f
    if any(c % p for c in difference.coeffs):
        raise ValueError(f"g*h - F is not divisible by {p}")
    t_bar = FpPoly(p, tuple(c // p for c in difference.coeffs))

    return fp_gcd(t_bar, fp_gcd(g_bar, h_bar)).degree > 0


# ----------------------------------------------------------------------
# Geometry
# ----------------------------------------------------------------------


def hull_bruteforce(points: Sequence[tuple[int, Valuation]]) -> NewtonPolygon:
    """
    Principal polygon by gift wrapping: from each vertex, the next vertex is
    the point of least slope (farthest on ties) while that slope is negative.
    """
    finite = sorted((x, int(y)) for x, y in points if y != INFINITY)
    if not finite:
        raise ValueError("at least one finite point is required")

    sides = []
    current = finite[0]
    while True:
        best: Optional[tuple[Fraction, int]] = None
        target = None
        for point in finite:
            if point[0] <= current[0]:
                continue
            slope = Fraction(point[1] - current[1], point[0] - current[0])
            key = (slope, -point[0])
            if best is None or key < best:
                best, target = key, point
        if target is None or best is None or best[0] >= 0:
            break
        sides.append(Side(current, target))
        current = target
    return NewtonPolygon(tuple(sides), tuple(points))


def lattice_index_bruteforce(polygon: NewtonPolygon, deg_phi: int) -> int:
    """deg phi times the lattice points x >= 1, y >= 1 on or below the polygon, by enumeration."""
    if polygon.is_empty:
        return 0
    x_end = polygon.sides[-1].end[0]
    y_top = polygon.sides[0].start[1]
    count = 0
    for x in range(1, x_end + 1):
        for y in range(1, y_top + 1):
            if any(
                side.start[0] <= x <= side.end[0]
                and y * side.length
                <= side.start[1] * side.length - (x - side.start[0]) * side.height
                for side in polygon.sides
            ):
                count += 1
    return deg_phi * count


# ----------------------------------------------------------------------
# Formulas
# ----------------------------------------------------------------------


def _determinant(matrix: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det


def discriminant_resultant(t: Trinomial) -> int:
    """
    Discriminant as -Res(F, F') with the resultant a Sylvester determinant
    evaluated by exact Gaussian elimination.
    """
    f = [1, t.a, 0, 0, 0, 0, t.b]  # highest degree first
    df = [6, 5 * t.a, 0, 0, 0, 0]
    size = 11
    rows = []
    for i in range(5):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in f] + [Fraction(0)] * (4 - i))
    for i in range(6):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in df] + [Fraction(0)] * (5 - i))
    assert all(len(row) == size for row in rows)
    return -int(_determinant(rows))


def irreducible_count_bruteforce(p: int, f: int) -> int:
    """
    Monic irreducibles of degree f over F_p: p^f minus the number of distinct
    products of two monic polynomials of positive degree.

    Raises:
        TooLargeError: when p^f exceeds the enumeration limit
    """
    require_prime(p)
    if f < 1:
        raise ValueError(f"degree must be positive, got {f}")
    if p**f > BRUTE_FORCE_FIELD_LIMIT:
        raise TooLargeError(
            f"{p}^{f} polynomials exceed the enumeration limit / 超出穷举上限"
        )
    reducible = set()
    for k in range(1, f // 2 + 1):
        for g in monic_polynomials(p, k):
            for h in monic_polynomials(p, f - k):
                reducible.add((g * h).coeffs)
    return p**f - len(reducible)


def bounded_factor_search(t: Trinomial) -> Optional[ZPoly]:
    """
    A monic integer factor of degree 1, 2 or 3 with coefficients inside the
    coefficient bound of its degree, or None when F is irreducible.
    """
    if t.b == 0:
        return ZPoly.x()
    f = ZPoly((t.b, 0, 0, 0, 0, t.a, 1))
    norm = isqrt(1 + t.a**2 + t.b**2) + 1
    samples = {r: f(r) for r in (1, -1, 2)}

    def divides_values(g: ZPoly) -> bool:
        # G(r) = 0 would make r a root of F
        return all(g(r) != 0 and value % g(r) == 0 for r, value in samples.items())

    for r in range(-norm, norm + 1):
        if f(r) == 0:
            return ZPoly.linear(r)

    # F has no integer roots from here on
    constants = _signed(divisors(abs(t.b)))
    bound = comb(2, 1) * norm
    for d in constants:
        for c in range(-bound, bound + 1):
            g = ZPoly((d, c, 1))
            if divides_values(g) and f.exact_quotient(g) is not None:
                return g

    # G(1) = 1 + c2 + c1 + d runs over the divisors of F(1)
    bound = comb(3, 1) * norm
    targets = _signed(divisors(abs(samples[1])))
    for d in constants:
        for c2 in range(-bound, bound + 1):
            for value in targets:
                c1 = value - 1 - c2 - d
                if abs(c1) > bound:
                    continue
                at_minus_one = -1 + c2 - c1 + d
                if at_minus_one == 0 or samples[-1] % at_minus_one:
                    continue
                g = ZPoly((d, c1, c2, 1))
                if divides_values(g) and f.exact_quotient(g) is not None:
                    return g
    return None


def _signed(values: Sequence[int]) -> list[int]:
    return list(values) + [-v for v in values]


# ----------------------------------------------------------------------
# Verification facade
# ----------------------------------------------------------------------


def _polygon_key(polygon: NewtonPolygon) -> list[list[int]]:
    return [list(v) for v in polygon.vertices]


def verify_report(t: Trinomial, report: IndexReport) -> list[OracleVerdict]:
    """
    Every oracle cross-check of an IndexReport.
    对 IndexReport 执行全部校验。
    """
    reduced = report.input
    f = trinomial_poly(reduced)
    verdicts = [
        OracleVerdict(
            f"discriminant{reduced.a, reduced.b}",
            discriminant(reduced),
            discriminant_resultant(reduced),
        ),
        OracleVerdict(
            f"irreducible{reduced.a, reduced.b}",
            is_irreducible(reduced),
            bounded_factor_search(reduced) is None,
        ),
    ]

    exponents = {2: report.nu2, 3: report.nu3, 5: report.nu5}
    for p in INDEX_PRIMES:
        divides = dedekind_divides(f, p)
        verdicts.append(
            OracleVerdict(f"dedekind p={p}", not theorem1_local_condition(reduced, p), divides)
        )

        outcome = splitting_outcome(reduced, p)
        if outcome.regular:
            verdicts.append(
                OracleVerdict(f"ore bound p={p}", outcome.index_lower_bound >= 1, divides)
            )
            verdicts.append(
                OracleVerdict(
                    f"index divisor p={p}",
                    is_index_divisor(outcome.splitting, p),
                    exponents[p] >= 1,
                )
            )
            try:
                verdicts.append(
                    OracleVerdict(
                        f"exponent p={p}",
                        engstrom_exponent(outcome.splitting, p),
                        exponents[p],
                    )
                )
            except FragmentMissError:
                pass
            for g in sorted({g for _, g in outcome.splitting.entries}):
                if p**g <= BRUTE_FORCE_FIELD_LIMIT:
                    verdicts.append(
                        OracleVerdict(
                            f"necklace p={p} f={g}",
                            count_monic_irreducibles(p, g),
                            irreducible_count_bruteforce(p, g),
                        )
                    )

        for analysis in outcome.diagnostics:
            context = f"p={p} phi={analysis.phi}"
            verdicts.append(
                OracleVerdict(
                    f"hull {context}",
                    _polygon_key(analysis.polygon),
                    _polygon_key(hull_bruteforce(analysis.polygon.source_points)),
                )
            )
            verdicts.append(
                OracleVerdict(
                    f"lattice {context}",
                    analysis.index,
                    lattice_index_bruteforce(analysis.polygon, analysis.phi.degree),
                )
            )

    if report.maximal_order_is_Zalpha is not None:
        d = 6**6 * reduced.b - 5**5 * reduced.a**6
        primes = sorted(set(primefactors(abs(reduced.b))) | set(primefactors(abs(d))))
        verdicts.append(
            OracleVerdict(
                "maximal order",
                report.maximal_order_is_Zalpha,
                not any(dedekind_divides(f, p) for p in primes),
            )
        )
    return verdicts
