"""
Factorisation and counting over F_p and its small extensions F_p[x]/(phi).
F_p 及其小扩域 F_p[x]/(phi) 上的分解与计数。

Everything here works at desk scale: residue fields have at most a few
thousand elements and polynomials have degree at most 6, so complete
factorisation is done by trial division with every monic candidate.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator, TypeVar, Union

from sympy import divisors

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import ZeroInputError
from sextic_index.classes.ResidueField import ResidueField, ResidueFieldPoly
from sextic_index.modules.utils import mobius, require_prime

Poly = TypeVar("Poly", FpPoly, ResidueFieldPoly)


# ----------------------------------------------------------------------
# F_p[x] primitives
# ----------------------------------------------------------------------


def fp_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    while not g.is_zero:
        f, g = g, f % g
    return f if f.is_zero else f.monic()


def fp_derivative(f: FpPoly) -> FpPoly:
    return f.derivative()


def fp_powmod(base: FpPoly, exponent: int, modulus: FpPoly) -> FpPoly:
    """base^exponent mod modulus by square and multiply."""
    if exponent < 0:
        raise ValueError("negative exponent")
    result = FpPoly.constant(base.p, 1) % modulus
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def fp_is_squarefree(f: FpPoly) -> bool:
    if f.is_zero:
        raise ZeroInputError("the zero polynomial is not squarefree")
    derivative = fp_derivative(f)
    if derivative.is_zero:
        return f.degree == 0
    return fp_gcd(f, derivative).degree == 0


def fp_distinct_degree(f: FpPoly) -> list[tuple[int, int]]:
    """
    Distinct-degree factorisation of a squarefree f.
    无平方因子多项式的不同次数分解。

    Returns:
        (degree, number of irreducible factors of that degree) pairs, ascending
    """
    require_prime(f.p)
    if f.is_zero:
        raise ZeroInputError("cannot factor the zero polynomial")
    x = FpPoly.x(f.p)
    remaining = f.monic()
    h = x % remaining if remaining.degree > 0 else x
    result: list[tuple[int, int]] = []
    d = 0
    while 2 * (d + 1) <= remaining.degree:
        d += 1
        h = fp_powmod(h, f.p, remaining)
        g = fp_gcd(remaining, h - x)
        if g.degree > 0:
            result.append((d, g.degree // d))
            remaining = remaining // g
            h = h % remaining if remaining.degree > 0 else h
    if remaining.degree > 0:
        result.append((remaining.degree, 1))
    return result


def fp_is_irreducible(f: FpPoly) -> bool:
    """Rabin-style test: no common factor with x^(p^d) - x for d <= deg/2."""
    require_prime(f.p)
    if f.degree < 1:
        return False
    x = FpPoly.x(f.p)
    monic = f.monic()
    h = x
    for _ in range(monic.degree // 2):
        h = fp_powmod(h, f.p, monic)
        if fp_gcd(monic, h - x).degree > 0:
            return False
    return True


# ----------------------------------------------------------------------
# Exhaustive factorisation
# ----------------------------------------------------------------------


def monic_polynomials(
    field: Union[int, ResidueField], degree: int
) -> Iterator[Union[FpPoly, ResidueFieldPoly]]:
    """
    Every monic polynomial of the given degree over F_p (field given as p) or
    over a residue field, in graded lexicographic order.
    按分级字典序枚举给定次数的全部首一多项式。
    """
    if isinstance(field, int):
        p = field
        for digits in product(range(p), repeat=degree):
            yield FpPoly(p, tuple(reversed(digits)) + (1,))
        return

    elements = list(field.elements())
    for digits in product(elements, repeat=degree):
        yield ResidueFieldPoly(field, tuple(reversed(digits)) + (field.one(),))


def _factor_by_trial_division(
    f: Poly, candidates: Callable[[int], Iterator[Poly]]
) -> list[tuple[Poly, int]]:
    if f.is_zero:
        raise ZeroInputError("cannot factor the zero polynomial")
    remaining = f.monic()
    factors: list[tuple[Poly, int]] = []
    d = 1
    while 2 * d <= remaining.degree:
        for candidate in candidates(d):
            if 2 * d > remaining.degree:
                break
            multiplicity = 0
            while True:
                quotient, remainder = divmod(remaining, candidate)
                if not remainder.is_zero:
                    break
                remaining = quotient
                multiplicity += 1
            if multiplicity:
                factors.append((candidate, multiplicity))
        d += 1
    if remaining.degree > 0:
        factors.append((remaining, 1))
    factors.sort(key=lambda item: item[0].sort_key())
    return factors


def fp_factor(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """
    Complete factorisation over F_p into monic irreducibles with multiplicities,
    sorted by (degree, coefficients).
    F_p 上的完全分解。

    Raises:
        ZeroInputError: for the zero polynomial
    """
    require_prime(f.p)
    return _factor_by_trial_division(
        f, lambda d: monic_polynomials(f.p, d)  # type: ignore[arg-type, return-value]
    )


def residue_factor(r: ResidueFieldPoly) -> list[tuple[ResidueFieldPoly, int]]:
    """
    Complete factorisation over a residue field F_p[x]/(phi).
    剩余域上的完全分解。

    Raises:
        ZeroInputError: for the zero polynomial
    """
    return _factor_by_trial_division(
        r, lambda d: monic_polynomials(r.field, d)  # type: ignore[arg-type, return-value]
    )


def fp_radical(f: FpPoly) -> FpPoly:
    """Product of the distinct monic irreducible factors of f."""
    require_prime(f.p)
    if f.is_zero:
        raise ZeroInputError("the zero polynomial has no radical")
    monic = f.monic()
    if f.p > monic.degree:
        derivative = fp_derivative(monic)
        if derivative.is_zero:
            return FpPoly.constant(f.p, 1)
        return monic // fp_gcd(monic, derivative)
    radical = FpPoly.constant(f.p, 1)
    for factor, _ in fp_factor(monic):
        radical = radical * factor
    return radical


# ----------------------------------------------------------------------
# Counting
# ----------------------------------------------------------------------


def count_monic_irreducibles(p: int, f: int) -> int:
    """
    N_f = (1/f) * sum over d | f of mu(d) * p^(f/d).
    F_p 上 f 次首一不可约多项式的个数。
    """
    require_prime(p)
    if f < 1:
        raise ValueError(f"degree must be positive, got {f}")
    total = sum(mobius(d) * p ** (f // d) for d in divisors(f))
    return total // f
