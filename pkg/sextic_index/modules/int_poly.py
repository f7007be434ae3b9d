"""
Integer layer: valuations, trinomial reduction, discriminants and
irreducibility of x^6 + a*x^5 + b over Q.
整数层：赋值、三项式约化、判别式与不可约性判定。
"""

from __future__ import annotations

from math import comb, gcd, isqrt
from typing import Optional

from sympy import divisors, integer_nthroot, multiplicity, prime, primerange

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import ZeroInputError
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import CERTIFICATE_PRIME_COUNT, INFINITY, Valuation
from sextic_index.modules.finite_field import fp_distinct_degree, fp_is_squarefree
from sextic_index.modules.utils import require_prime

# ----------------------------------------------------------------------
# Valuations
# ----------------------------------------------------------------------


def valuation(p: int, m: int) -> Valuation:
    """
    p-adic valuation of m; INFINITY for m = 0.
    m 的 p-进赋值；m = 0 时为 INFINITY。
    """
    require_prime(p)
    if m == 0:
        return INFINITY
    return int(multiplicity(p, abs(m)))


def unit_part(p: int, m: int) -> int:
    """m / p^v_p(m), sign preserved."""
    require_prime(p)
    if m == 0:
        raise ZeroInputError("the unit part of 0 is undefined / 0 没有单位部分")
    return m // p ** int(multiplicity(p, abs(m)))


def poly_valuation(p: int, f: ZPoly) -> Valuation:
    """Gauss valuation: minimum over the coefficient valuations."""
    if f.is_zero:
        require_prime(p)
        return INFINITY
    return min(valuation(p, c) for c in f.coeffs if c)


# ----------------------------------------------------------------------
# Trinomials
# ----------------------------------------------------------------------


def trinomial_poly(t: Trinomial) -> ZPoly:
    return ZPoly((t.b, 0, 0, 0, 0, t.a, 1))


def is_reduced(t: Trinomial) -> bool:
    """No prime p has p | a and p^6 | b."""
    limit = integer_nthroot(abs(t.b), 6)[0]
    return all(t.a % p or t.b % p**6 for p in primerange(2, limit + 1))


def reduce_trinomial(t: Trinomial) -> Trinomial:
    """
    Replace (a, b) by (a/p, b/p^6) while some prime allows it.
    反复用 (a/p, b/p^6) 替换 (a, b)，直到无法约化。
    """
    a, b = t.a, t.b
    changed = True
    while changed:
        changed = False
        limit = integer_nthroot(abs(b), 6)[0]
        for p in primerange(2, limit + 1):
            while a % p == 0 and b % p**6 == 0:
                a, b = a // p, b // p**6
                changed = True
    return Trinomial(a, b)


def trinomial_discriminant(a: int, b: int) -> int:
    """Closed form -b^4 (6^6 b - 5^5 a^6); zero when b = 0."""
    return -(b**4) * (6**6 * b - 5**5 * a**6)


def discriminant(t: Trinomial) -> int:
    return trinomial_discriminant(t.a, t.b)


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: ZPoly, g: ZPoly) -> list[list[int]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    top_f = list(reversed(f.coeffs))
    top_g = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + top_f + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + top_g + [0] * (size - n - 1 - i))
    return rows


def poly_discriminant(f: ZPoly) -> int:
    """
    Discriminant of a monic polynomial via the Sylvester resultant of f and f'.
    通过 Sylvester 结式计算首一多项式的判别式。
    """
    if not f.is_monic or f.degree < 1:
        raise ValueError(f"{f} must be monic of positive degree")
    c = f.coeffs
    if f.degree == 6 and c[1:5] == (0, 0, 0, 0):
        return trinomial_discriminant(c[5], c[0])
    n = f.degree
    resultant = bareiss_determinant(sylvester_matrix(f, f.derivative()))
    return resultant if (n * (n - 1) // 2) % 2 == 0 else -resultant


# ----------------------------------------------------------------------
# Irreducibility
# ----------------------------------------------------------------------


def degree_partitions_mod_p(f: ZPoly, p: int) -> Optional[tuple[int, ...]]:
    """Factor degrees of f mod p when f mod p is squarefree of full degree, else None."""
    reduced = FpPoly.from_zpoly(f, p)
    if reduced.degree != f.degree or not fp_is_squarefree(reduced):
        return None
    parts: list[int] = []
    for degree, count in fp_distinct_degree(reduced):
        parts.extend([degree] * count)
    return tuple(sorted(parts))


def _subset_sums(parts: tuple[int, ...]) -> set[int]:
    sums = {0}
    for part in parts:
        sums |= {s + part for s in sums}
    return sums


def integer_roots(t: Trinomial) -> list[int]:
    """Integer roots r of x^6 + a*x^5 + b; they satisfy r^5 (r + a) = -b."""
    bound = integer_nthroot(abs(t.b), 5)[0] + 1
    f = trinomial_poly(t)
    return [r for r in range(-bound, bound + 1) if r and t.b % r == 0 and f(r) == 0]


def mignotte_bound(t: Trinomial, k: int) -> int:
    """Coefficient bound C(k, i) * ||F||_2 for a degree-k factor, maximised over i."""
    norm = isqrt(1 + t.a**2 + t.b**2) + 1
    return max(comb(k, i) for i in range(k + 1)) * norm


def _signed_divisors(n: int) -> list[int]:
    positive = divisors(abs(n))
    return [d for d in positive] + [-d for d in positive]


def find_quadratic_factor(t: Trinomial) -> Optional[ZPoly]:
    """
    Monic quadratic x^2 + c*x + d dividing F, if any.

    Comparing the x^1 coefficients of F = (x^2 + c x + d) * quartic gives
    -d c^3 + a d c^2 + (2 d^2 + b/d) c - a d^2 = 0, so c divides a d^2.
    """
    f = trinomial_poly(t)
    bound = mignotte_bound(t, 2)
    for d in _signed_divisors(t.b):
        cofactor = t.b // d
        if t.a == 0:
            candidates = {0}
            numerator = 2 * d * d + cofactor
            if numerator % d == 0 and numerator // d >= 0:
                root = isqrt(numerator // d)
                if root * root == numerator // d:
                    candidates |= {root, -root}
        else:
            candidates = set(_signed_divisors(t.a * d * d))
        for c in sorted(candidates):
            if abs(c) > bound:
                continue
            if -d * c**3 + t.a * d * c**2 + (2 * d * d + cofactor) * c - t.a * d * d:
                continue
            g = ZPoly((d, c, 1))
            if f.exact_quotient(g) is not None:
                return g
    return None


def find_cubic_factor(t: Trinomial) -> Optional[ZPoly]:
    """
    Monic cubic x^3 + c2 x^2 + c1 x + d dividing F, if any.

    With F = (x^3 + c2 x^2 + c1 x + d)(x^3 + e2 x^2 + e1 x + d'), g = gcd(d, d'),
    d = g*r, d' = g*s, the x^1 coefficient forces c1 = -r*m, e1 = s*m, and the
    x^4 coefficient then gives c2 * e2 = m (r - s) with c2 + e2 = a.
    """
    f = trinomial_poly(t)
    bound = mignotte_bound(t, 3)
    for d in _signed_divisors(t.b):
        cofactor = t.b // d
        g = gcd(d, cofactor)
        r, s = d // g, cofactor // g
        if r == s:
            # c2 * e2 = 0 and the x^2 coefficient gives m^2 = d * a
            square = d * t.a
            if square < 0:
                continue
            m = isqrt(square)
            if m * m != square:
                continue
            m_values = {m, -m}
        else:
            m_bound = bound // max(abs(r), abs(s))
            m_values = set(range(-m_bound, m_bound + 1))
        for m in sorted(m_values):
            disc = t.a * t.a - 4 * m * (r - s)
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc or (t.a + root) % 2:
                continue
            for c2 in {(t.a + root) // 2, (t.a - root) // 2}:
                if abs(c2) > bound:
                    continue
                cubic = ZPoly((d, -r * m, c2, 1))
                if f.exact_quotient(cubic) is not None:
                    return cubic
    return None


def find_integer_factor(t: Trinomial, degrees: set[int]) -> Optional[ZPoly]:
    """A monic integer factor of F whose degree lies in `degrees`, if any."""
    if 1 in degrees:
        roots = integer_roots(t)
        if roots:
            return ZPoly.linear(roots[0])
    if 2 in degrees or 4 in degrees:
        quadratic = find_quadratic_factor(t)
        if quadratic is not None:
            return quadratic
    if 3 in degrees:
        return find_cubic_factor(t)
    return None


def is_irreducible(t: Trinomial) -> bool:
    """
    Whether x^6 + a*x^5 + b is irreducible over Q.
    判定 x^6 + a*x^5 + b 在 Q 上是否不可约。

    Rational roots are ruled out first. Each of the first primes for which F
    stays squarefree mod p restricts the possible degrees of a factor to the
    subset sums of its factor-degree partition; only the degrees that survive
    every prime are searched for explicitly.
    """
    if integer_roots(t):
        return False

    f = trinomial_poly(t)
    possible = {2, 3}
    for p in primerange(2, prime(CERTIFICATE_PRIME_COUNT) + 1):
        parts = degree_partitions_mod_p(f, p)
        if parts is None:
            continue
        possible &= _subset_sums(parts)
        if not possible:
            return True

    return find_integer_factor(t, possible) is None
