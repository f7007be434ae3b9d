"""
Assemble phi-polygons into the index bound and splitting of a prime, and
search for regular integers along integer-slope double roots.
将各 phi-多边形汇总为素数的指数下界与分解类型，并沿整数斜率重根搜索正则整数。
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Optional

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import (
    ClassifierContradictionError,
    InvalidPolynomialError,
    IrrelevantModulusError,
    NonTerminatingError,
    OutsideScopeError,
)
from sextic_index.classes.SplittingType import (
    OreOutcome,
    PhiAnalysis,
    SideResidual,
    SplittingType,
)
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.finite_field import fp_factor
from sextic_index.modules.int_poly import (
    poly_discriminant,
    trinomial_poly,
    unit_part,
    valuation,
)
from sextic_index.modules.phi_newton import (
    candidate_splittings,
    phi_expand,
    phi_index,
    principal_polygon,
    side_residuals,
)
from sextic_index.modules.utils import require_prime

# ----------------------------------------------------------------------
# Per-phi analysis
# ----------------------------------------------------------------------


def lift_factor(factor: FpPoly) -> ZPoly:
    """
    Integer lift of a monic factor of F mod p: x - z with z in [0, p) for
    degree one, coefficients in [0, p) otherwise.
    """
    if factor.degree == 1:
        return ZPoly.linear((-factor.coefficient(0)) % factor.p)
    return factor.lift()


def analyze_phi(
    f: ZPoly, phi: ZPoly, p: int, multiplicity: int, shifts: tuple[int, ...] = ()
) -> PhiAnalysis:
    """Expansion, principal polygon, residuals and ind_phi for one phi."""
    expansion = phi_expand(f, phi, p)
    polygon = principal_polygon(expansion)
    return PhiAnalysis(
        phi=phi,
        multiplicity=multiplicity,
        expansion=expansion,
        polygon=polygon,
        residuals=side_residuals(expansion, polygon),
        index=phi_index(polygon, phi.degree),
        shifts=shifts,
    )


def _candidates(analysis: PhiAnalysis) -> tuple[SplittingType, ...]:
    """Splittings the factor can contribute, combining every side's options."""
    options: list[list[tuple[tuple[int, int], ...]]] = []
    for item in analysis.residuals:
        if item.separable:
            fixed = tuple(
                (item.side.ramification, analysis.phi.degree * psi.degree)
                for psi, _ in item.factors
            )
            options.append([fixed])
        else:
            options.append(
                [s.entries for s in candidate_splittings(item.side, analysis.phi.degree)]
            )
    combined = {
        SplittingType.of(entry for part in choice for entry in part)
        for choice in product(*options)
    }
    return tuple(sorted(combined, key=lambda s: (len(s.entries), s.entries)))


def _with_candidates(analysis: PhiAnalysis, note: str) -> PhiAnalysis:
    return PhiAnalysis(
        phi=analysis.phi,
        multiplicity=analysis.multiplicity,
        expansion=analysis.expansion,
        polygon=analysis.polygon,
        residuals=analysis.residuals,
        index=analysis.index,
        shifts=analysis.shifts,
        candidates=_candidates(analysis),
        note=note,
    )


def _validate(f: ZPoly) -> None:
    if f.degree != 6 or not f.is_monic:
        raise InvalidPolynomialError(
            f"{f} must be monic of degree 6 / 必须是首一六次多项式"
        )
    if poly_discriminant(f) == 0:
        raise InvalidPolynomialError(f"{f} is not squarefree / 不是无平方因子多项式")


def _outcome(p: int, analyses: Iterable[PhiAnalysis]) -> OreOutcome:
    analyses = tuple(analyses)
    regular = all(item.regular for item in analyses)
    if regular:
        splitting = SplittingType.of(
            entry for item in analyses for entry in item.entries
        )
        if splitting.degree != 6:
            raise ClassifierContradictionError(
                f"splitting {splitting} of {p} has sum(e*f) = {splitting.degree}, not 6"
            )
    else:
        splitting = SplittingType.undetermined()
    return OreOutcome(
        p=p,
        index_lower_bound=sum(item.index for item in analyses),
        regular=regular,
        splitting=splitting,
        diagnostics=analyses,
    )


def factor_multiplicity(f: ZPoly, phi: ZPoly, p: int) -> int:
    """Exponent of phi mod p in F mod p."""
    modulus = FpPoly.from_zpoly(phi, p)
    remaining = FpPoly.from_zpoly(f, p)
    multiplicity = 0
    while True:
        quotient, remainder = divmod(remaining, modulus)
        if not remainder.is_zero:
            return multiplicity
        remaining = quotient
        multiplicity += 1


def ore_analyze(f: ZPoly, p: int) -> OreOutcome:
    """
    Index lower bound sum(ind_phi) and, when F is p-regular, the splitting of p.
    指数下界 sum(ind_phi)，以及 F 为 p-正则时 p 的分解类型。

    A degree-one factor that is not regular is retried at the regular
    integer found by regular_integer; when that search leaves its scope the
    factor keeps its candidate splittings and the outcome is undetermined.

    Raises:
        InvalidPolynomialError: when F is not monic of degree 6 or not squarefree
        ClassifierContradictionError: when a determined splitting has sum(e*f) != 6
    """
    require_prime(p)
    _validate(f)
    factors = fp_factor(FpPoly.from_zpoly(f, p))

    if corollary1_zero_index(f, p):
        # every factor is simple or has one side of height 1: regular, bound 0
        outcome = _outcome(
            p, (analyze_phi(f, lift_factor(g), p, m) for g, m in factors)
        )
        if outcome.index_lower_bound or not outcome.regular:
            raise ClassifierContradictionError(
                f"{f} at {p}: height-one polygons gave bound"
                f" {outcome.index_lower_bound}, regular={outcome.regular}"
            )
        return outcome

    analyses = []
    for factor, multiplicity in factors:
        phi = lift_factor(factor)
        analysis = analyze_phi(f, phi, p, multiplicity)

        if not analysis.regular and phi.degree == 1:
            z = -phi.coefficient(0)
            try:
                shifts = regular_shifts(f, p, z)
                analysis = analyze_phi(
                    f, ZPoly.linear(shifts[-1]), p, multiplicity, tuple(shifts)
                )
            except (OutsideScopeError, NonTerminatingError) as e:
                analysis = _with_candidates(analysis, str(e))
        elif not analysis.regular:
            analysis = _with_candidates(
                analysis, "residual not separable for a factor of degree > 1"
            )

        analyses.append(analysis)

    return _outcome(p, analyses)


def corollary1_zero_index(f: ZPoly, p: int) -> bool:
    """
    True when every factor of F mod p is simple or has a principal polygon made
    of a single side of height 1; then p does not divide the index of alpha.
    """
    require_prime(p)
    _validate(f)
    for factor, multiplicity in fp_factor(FpPoly.from_zpoly(f, p)):
        if multiplicity == 1:
            continue
        polygon = principal_polygon(phi_expand(f, lift_factor(factor), p))
        if len(polygon.sides) != 1 or polygon.sides[0].height != 1:
            return False
    return True


# ----------------------------------------------------------------------
# Regular integers
# ----------------------------------------------------------------------


def _double_root(item: SideResidual) -> int:
    """Root t in [0, p) of the unique double factor of an integer-slope residual."""
    side = item.side
    repeated = [(psi, m) for psi, m in item.factors if m > 1]
    if side.ramification != 1:
        raise OutsideScopeError(
            f"side {side} has non-integer slope {side.slope} / 边的斜率不是整数"
        )
    if len(repeated) != 1 or repeated[0][0].degree != 1 or repeated[0][1] != 2:
        raise OutsideScopeError(
            f"residual {item.residual} of side {side} has no unique double root"
            " / 剩余多项式没有唯一的二重根"
        )
    psi = repeated[0][0]
    constant = psi.coefficient(0).value.coefficient(0)
    return (-constant) % psi.field.p


def regular_shifts(f: ZPoly, p: int, z: int) -> list[int]:
    """
    Every shift visited while searching for a regular integer from z; the
    last entry is the regular integer.

    Raises:
        IrrelevantModulusError: when x - z does not divide F mod p
        OutsideScopeError: when a bad side has non-integer slope or no unique double root
        NonTerminatingError: when the iteration cap is exceeded
        ClassifierContradictionError: when a shift does not raise ind_(x - s)
    """
    require_prime(p)
    if f(z) % p:
        raise IrrelevantModulusError(
            f"x - {z} does not divide F modulo {p} / x - {z} 模 {p} 不整除 F"
        )

    cap = int(valuation(p, poly_discriminant(f))) // 2 + 1
    multiplicity = factor_multiplicity(f, ZPoly.linear(z), p)
    s = z
    shifts = [s]
    previous: Optional[int] = None
    for _ in range(cap + 1):
        analysis = analyze_phi(f, ZPoly.linear(s), p, multiplicity)
        if previous is not None and analysis.index <= previous:
            raise ClassifierContradictionError(
                f"ind_(x-{s}) = {analysis.index} did not increase from {previous}"
                f" / ind 未增加"
            )
        previous = analysis.index
        bad = [item for item in analysis.residuals if not item.separable]
        if not bad:
            return shifts
        t = _double_root(bad[0])
        s = s + p ** bad[0].side.slope_height * t
        shifts.append(s)

    raise NonTerminatingError(
        f"no regular integer for x - {z} at p = {p} after {cap} shifts"
        f" / {cap} 次平移后仍未找到正则整数"
    )


def regular_integer(f: ZPoly, p: int, z: int) -> int:
    """
    s = z mod p such that F is (x - s)-regular, found by s <- s + p^k * t.
    寻找使 F 为 (x - s)-正则的整数 s。

    Raises:
        IrrelevantModulusError: when x - z does not divide F mod p
        OutsideScopeError: when a bad side has non-integer slope or no unique double root
        NonTerminatingError: when the iteration cap is exceeded
        ClassifierContradictionError: when a shift does not raise ind_(x - s)
    """
    return regular_shifts(f, p, z)[-1]


# ----------------------------------------------------------------------
# Derived quantities
# ----------------------------------------------------------------------


def prime_count_upper_bound(outcome: OreOutcome, f: int) -> int:
    """
    Upper bound on the number of primes of residue degree f above p; exact
    when the outcome is regular.
    剩余次数为 f 的素理想个数上界。
    """
    if outcome.regular:
        return outcome.splitting.count(f)
    bound = 0
    for analysis in outcome.diagnostics:
        deg_phi = analysis.phi.degree
        if analysis.regular:
            bound += sum(1 for _, g in analysis.entries if g == f)
            continue
        if f % deg_phi:
            continue
        for item in analysis.residuals:
            bound += item.side.degree // (f // deg_phi)
    return bound


def proposition5_shift(t: Trinomial) -> Optional[OreOutcome]:
    """
    Analysis of 5 when 5 does not divide a, 5 | b and 5 | v_5(b): the factor x
    of F mod 5 is replaced by phi = x + 5^k * u with k = v_5(b)/5 and
    u = b_5 / a mod 5. None for every other (a, b).
    """
    if t.a % 5 == 0 or t.b % 5:
        return None
    v = int(valuation(5, t.b))
    if v % 5:
        return None

    k = v // 5
    u = unit_part(5, t.b) * pow(t.a, -1, 5) % 5
    shift = 5**k * u
    f = trinomial_poly(t)
    _validate(f)

    analyses = [
        analyze_phi(f, ZPoly((shift, 1)), 5, 5),
        analyze_phi(f, ZPoly((t.a % 5, 1)), 5, 1),
    ]
    return _outcome(5, analyses)
