"""
Phi-adic expansions, principal Newton polygons, residual polynomials and
phi-indices.
phi-进展开、主牛顿多边形、剩余多项式与 phi-指数。
"""

from __future__ import annotations

from typing import Iterator, Sequence

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import (
    DegenerateInputError,
    InvalidSideError,
    IrrelevantModulusError,
    NonMonicModulusError,
)
from sextic_index.classes.NewtonPolygon import NewtonPolygon, PhiExpansion, Point, Side
from sextic_index.classes.ResidueField import ResidueField, ResidueFieldPoly
from sextic_index.classes.SplittingType import SideResidual, SplittingType
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import INFINITY, Valuation
from sextic_index.modules.finite_field import fp_is_irreducible, residue_factor
from sextic_index.modules.int_poly import poly_valuation
from sextic_index.modules.utils import require_prime

# ----------------------------------------------------------------------
# Expansion
# ----------------------------------------------------------------------


def phi_expand(f: ZPoly, phi: ZPoly, p: int) -> PhiExpansion:
    """
    Digits a_i of F = sum a_i * phi^i by repeated division, with their
    p-adic Gauss valuations.
    通过反复带余除法求 phi-进展开及各系数的赋值。

    Raises:
        NonMonicModulusError: when phi is not monic
        DegenerateInputError: when phi is constant or F is zero
    """
    require_prime(p)
    if phi.degree < 1:
        raise DegenerateInputError(f"phi = {phi} must have positive degree / phi 次数须为正")
    if not phi.is_monic:
        raise NonMonicModulusError(f"phi = {phi} is not monic / phi 不是首一多项式")
    if f.is_zero:
        raise DegenerateInputError("cannot expand the zero polynomial / 无法展开零多项式")

    digits: list[ZPoly] = []
    quotient = f
    while not quotient.is_zero:
        quotient, digit = quotient.divmod_monic(phi)
        digits.append(digit)

    return PhiExpansion(
        phi=phi,
        p=p,
        digits=tuple(digits),
        valuations=tuple(poly_valuation(p, digit) for digit in digits),
    )


# ----------------------------------------------------------------------
# Polygon
# ----------------------------------------------------------------------


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> list[Point]:
    """Vertices of the lower convex hull, left to right, collinear points dropped."""
    hull: list[Point] = []
    for point in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull


def polygon_from_points(points: Sequence[tuple[int, Valuation]]) -> NewtonPolygon:
    """
    Principal polygon of a point cloud; INFINITY ordinates are ignored.
    点集的主多边形，忽略无穷纵坐标。
    """
    finite = [(x, int(y)) for x, y in points if y != INFINITY]
    hull = lower_hull(finite)
    sides = []
    for start, end in zip(hull, hull[1:]):
        if end[1] >= start[1]:
            break
        sides.append(Side(start, end))
    return NewtonPolygon(tuple(sides), tuple(points))


def principal_polygon(expansion: PhiExpansion) -> NewtonPolygon:
    """
    The negative-slope part of the lower hull of the points (i, u_i).
    点 (i, u_i) 下凸包的负斜率部分。

    Raises:
        DegenerateInputError: when fewer than two digits exist (constant F)
    """
    if len(expansion.digits) < 2:
        raise DegenerateInputError(
            "a constant polynomial has no Newton polygon / 常数多项式没有牛顿多边形"
        )
    return polygon_from_points(list(enumerate(expansion.valuations)))


def polygon_vertices(polygon: NewtonPolygon) -> list[Point]:
    """Vertices left to right, for the CLI documents."""
    return polygon.vertices


# ----------------------------------------------------------------------
# Residual polynomials
# ----------------------------------------------------------------------


def residue_field_of(phi: ZPoly, p: int) -> ResidueField:
    """
    F_phi = F_p[x]/(phi mod p).

    Raises:
        NonMonicModulusError: when phi is not monic
        IrrelevantModulusError: when phi mod p is not irreducible
    """
    require_prime(p)
    if not phi.is_monic:
        raise NonMonicModulusError(f"phi = {phi} is not monic / phi 不是首一多项式")
    reduced = FpPoly.from_zpoly(phi, p)
    if reduced.degree != phi.degree or not fp_is_irreducible(reduced):
        raise IrrelevantModulusError(
            f"{phi} is not irreducible modulo {p} / {phi} 模 {p} 不是不可约多项式"
        )
    return ResidueField(reduced)


def residual_polynomial(expansion: PhiExpansion, side: Side) -> ResidueFieldPoly:
    """
    Residual polynomial of a side over F_phi.
    边对应的剩余多项式。

    Coefficient t_i comes from the point at abscissa x0 + i*e: the digit
    divided by p^u and reduced mod (p, phi) when that point lies on the
    side, 0 otherwise.

    Raises:
        InvalidSideError: when the side is not a side of the principal polygon
        IrrelevantModulusError: when phi mod p is not irreducible
    """
    polygon = principal_polygon(expansion)
    if side not in polygon.sides:
        raise InvalidSideError(
            f"side {side} is not on the polygon {polygon.vertices} / 该边不在多边形上"
        )
    field = residue_field_of(expansion.phi, expansion.p)
    return _residual(expansion, side, field)


def _residual(expansion: PhiExpansion, side: Side, field: ResidueField) -> ResidueFieldPoly:
    p = expansion.p
    coeffs = []
    for i in range(side.degree + 1):
        x = side.start[0] + i * side.ramification
        u = expansion.valuations[x]
        if not side.contains((x, u)):
            coeffs.append(field.zero())
            continue
        scale = p ** int(u)
        unit = ZPoly(tuple(c // scale for c in expansion.digits[x].coeffs))
        coeffs.append(field.element(FpPoly.from_zpoly(unit, p)))
    return ResidueFieldPoly(field, tuple(coeffs))


def side_residuals(expansion: PhiExpansion, polygon: NewtonPolygon) -> tuple[SideResidual, ...]:
    """Residual polynomial and its factorisation for every side of the polygon."""
    if polygon.is_empty:
        return ()
    field = residue_field_of(expansion.phi, expansion.p)
    result = []
    for side in polygon.sides:
        residual = _residual(expansion, side, field)
        result.append(SideResidual(side, residual, tuple(residue_factor(residual))))
    return tuple(result)


# ----------------------------------------------------------------------
# Index and regularity
# ----------------------------------------------------------------------


def phi_index(polygon: NewtonPolygon, deg_phi: int) -> int:
    """
    deg phi times the number of lattice points (x, y), x >= 1, y >= 1, on or
    below the principal polygon.
    多边形上或下方满足 x >= 1, y >= 1 的格点数乘以 deg phi。
    """
    count = 0
    for x in range(1, polygon.vertices[-1][0] + 1 if polygon.sides else 1):
        heights = [
            side.floor_height_at(x)
            for side in polygon.sides
            if side.start[0] <= x <= side.end[0]
        ]
        if heights:
            count += max(0, max(heights))
    return deg_phi * count


def is_phi_regular(f: ZPoly, phi: ZPoly, p: int) -> bool:
    """
    Whether every side of N_phi^+(F) has a squarefree residual polynomial.
    N_phi^+(F) 的每条边的剩余多项式是否均无平方因子。

    Raises:
        IrrelevantModulusError: when phi mod p is not irreducible or does not divide F mod p
    """
    require_prime(p)
    residue_field_of(phi, p)
    if not (FpPoly.from_zpoly(f, p) % FpPoly.from_zpoly(phi, p)).is_zero:
        raise IrrelevantModulusError(
            f"{phi} does not divide F modulo {p} / {phi} 模 {p} 不整除 F"
        )
    expansion = phi_expand(f, phi, p)
    polygon = principal_polygon(expansion)
    return all(item.separable for item in side_residuals(expansion, polygon))


# ----------------------------------------------------------------------
# Candidate splittings for irregular sides
# ----------------------------------------------------------------------


def _multisets(
    pairs: list[tuple[int, int]], total: int, max_entries: int, start: int = 0
) -> Iterator[tuple[tuple[int, int], ...]]:
    if total == 0:
        yield ()
        return
    if max_entries == 0:
        return
    for i in range(start, len(pairs)):
        e, f = pairs[i]
        if e * f > total:
            continue
        for rest in _multisets(pairs, total - e * f, max_entries - 1, i):
            yield ((e, f),) + rest


def candidate_splittings(side: Side, deg_phi: int) -> list[SplittingType]:
    """
    Every splitting a side can contribute when its residual is not separable:
    multisets of (e', f') with e | e', deg phi | f', sum e'f' = l * deg phi,
    and at most d entries.
    剩余多项式不可分时，该边可能贡献的所有分解类型。
    """
    total = side.length * deg_phi
    pairs = [
        (e, f)
        for e in range(side.ramification, total + 1, side.ramification)
        for f in range(deg_phi, total + 1, deg_phi)
        if e * f <= total
    ]
    found = {SplittingType.of(entries) for entries in _multisets(pairs, total, side.degree)}
    return sorted(found, key=lambda s: (len(s.entries), s.entries))
