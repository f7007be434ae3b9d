"""
Phi-adic expansions, polygon sides and principal Newton polygons.
phi-进展开、多边形边与主牛顿多边形。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from sextic_index.classes.IndexExceptions import InvalidSideError
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.const import INFINITY, Valuation

Point = tuple[int, int]


@dataclass(frozen=True)
class Side:
    """
    A side of negative slope between two lattice points.
    两个格点之间的负斜率边。
    """

    start: Point
    end: Point

    def __post_init__(self) -> None:
        (x0, y0), (x1, y1) = self.start, self.end
        if not x0 < x1 or not y0 > y1:
            raise InvalidSideError(
                f"side {self.start}-{self.end} must run right and strictly down"
            )

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def degree(self) -> int:
        return gcd(self.length, self.height)

    @property
    def ramification(self) -> int:
        """Denominator e of the reduced slope -h/e."""
        return self.length // self.degree

    @property
    def slope_height(self) -> int:
        """Numerator h of the reduced slope -h/e."""
        return self.height // self.degree

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    def contains(self, point: tuple[int, Valuation]) -> bool:
        """Whether a point lies on the segment."""
        x, y = point
        if not self.start[0] <= x <= self.end[0]:
            return False
        return y * self.length == (
            self.start[1] * self.length - (x - self.start[0]) * self.height
        )

    def floor_height_at(self, x: int) -> int:
        """Largest integer y on or below the side at abscissa x."""
        return (self.start[1] * self.length - (x - self.start[0]) * self.height) // (
            self.length
        )

    def to_document(self) -> dict:
        return {
            "start": list(self.start),
            "end": list(self.end),
            "slope": str(self.slope),
            "length": self.length,
            "height": self.height,
            "degree": self.degree,
        }

    def __str__(self) -> str:
        return f"{self.start}-{self.end}"


@dataclass(frozen=True)
class NewtonPolygon:
    """
    Principal polygon: contiguous sides with strictly increasing negative slopes.
    主多边形：相邻且斜率严格递增的负斜率边。
    """

    sides: tuple[Side, ...]
    source_points: tuple[tuple[int, Valuation], ...] = ()

    def __post_init__(self) -> None:
        for left, right in zip(self.sides, self.sides[1:]):
            if left.end != right.start:
                raise InvalidSideError(f"sides {left} and {right} are not contiguous")
            if not left.slope < right.slope:
                raise InvalidSideError(
                    f"slopes of {left} and {right} are not strictly increasing"
                )

    @property
    def is_empty(self) -> bool:
        return not self.sides

    @property
    def vertices(self) -> list[Point]:
        if not self.sides:
            return []
        return [self.sides[0].start] + [side.end for side in self.sides]

    @property
    def length(self) -> int:
        return sum(side.length for side in self.sides)

    def to_document(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "sides": [side.to_document() for side in self.sides],
        }


@dataclass(frozen=True)
class PhiExpansion:
    """
    F = sum digits[i] * phi^i with deg digits[i] < deg phi, and the Gauss
    valuation u_i of every digit.
    F 的 phi-进展开及各系数的高斯赋值。
    """

    phi: ZPoly
    p: int
    digits: tuple[ZPoly, ...]
    valuations: tuple[Valuation, ...]

    def __post_init__(self) -> None:
        if len(self.digits) != len(self.valuations):
            raise ValueError("one valuation per digit is required")

    @property
    def points(self) -> list[tuple[int, int]]:
        """Finite points (i, u_i); zero digits are omitted."""
        return [(i, int(u)) for i, u in enumerate(self.valuations) if u != INFINITY]

    def reconstruct(self) -> ZPoly:
        """Horner evaluation in phi."""
        result = ZPoly()
        for digit in reversed(self.digits):
            result = result * self.phi + digit
        return result
