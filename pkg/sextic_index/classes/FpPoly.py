"""
Polynomials over the prime field F_p.
素域 F_p 上的多项式。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from sextic_index.classes.IndexExceptions import ZeroInputError
from sextic_index.classes.ZPoly import ZPoly, format_polynomial


@dataclass(frozen=True)
class FpPoly:
    """
    Polynomial over F_p with coefficients in [0, p), lowest degree first.
    F_p 上的多项式，系数取 [0, p)，低次在前。
    """

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"characteristic must be at least 2, got {self.p}")
        coeffs = tuple(int(c) % self.p for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def from_zpoly(cls, poly: ZPoly, p: int) -> FpPoly:
        return cls(p, poly.coeffs)

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls(p, (0, 1))

    @classmethod
    def constant(cls, p: int, value: int) -> FpPoly:
        return cls(p, (value,))

    def lift(self) -> ZPoly:
        """Integer lift with coefficients in [0, p)."""
        return ZPoly(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Graded lexicographic key: degree first, then coefficients from the top."""
        return self.degree, tuple(reversed(self.coeffs))

    def monic(self) -> FpPoly:
        if self.is_zero:
            raise ZeroInputError("the zero polynomial has no monic associate")
        return self * pow(self.leading, -1, self.p)

    def _coerce(self, other: Union[FpPoly, int]) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"mixed characteristics {self.p} and {other.p}")
            return other
        return FpPoly.constant(self.p, int(other))

    def __add__(self, other: Union[FpPoly, int]) -> FpPoly:
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(
            self.p,
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)),
        )

    __radd__ = __add__

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[FpPoly, int]) -> FpPoly:
        return self + (-self._coerce(other))

    def __mul__(self, other: Union[FpPoly, int]) -> FpPoly:
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return FpPoly(self.p)
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                product[i + j] += x * y
        return FpPoly(self.p, tuple(product))

    __rmul__ = __mul__

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        inverse = pow(other.leading, -1, self.p)
        remainder = list(self.coeffs)
        d = other.degree
        if len(remainder) - 1 < d:
            return FpPoly(self.p), self
        quotient = [0] * (len(remainder) - d)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            factor = remainder[shift + d] * inverse % self.p
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] = (remainder[shift + i] - factor * c) % self.p
        return FpPoly(self.p, tuple(quotient)), FpPoly(self.p, tuple(remainder[:d]))

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = (result * value + c) % self.p
        return result

    def render(self, var: str = "x") -> str:
        return format_polynomial(self.coeffs, var)

    def __str__(self) -> str:
        return self.render()
