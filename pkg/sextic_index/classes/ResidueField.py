"""
Residue fields F_p[x]/(phi) and polynomials over them.
剩余域 F_p[x]/(phi) 及其上的多项式。
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Union

from sextic_index.classes.FpPoly import FpPoly
from sextic_index.classes.IndexExceptions import ZeroInputError
from sextic_index.classes.ZPoly import format_polynomial


@dataclass(frozen=True)
class ResidueField:
    """
    The field F_p[x]/(modulus); the modulus must be monic and irreducible.
    剩余域 F_p[x]/(modulus)，模多项式须首一且不可约。
    """

    modulus: FpPoly

    def __post_init__(self) -> None:
        if not self.modulus.is_monic or self.modulus.degree < 1:
            raise ValueError(f"modulus {self.modulus} must be monic of degree >= 1")

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def degree(self) -> int:
        return self.modulus.degree

    @property
    def size(self) -> int:
        return self.p**self.degree

    def element(self, value: Union[FpPoly, int]) -> ResidueFieldElem:
        if not isinstance(value, FpPoly):
            value = FpPoly.constant(self.p, value)
        return ResidueFieldElem(self, value)

    def zero(self) -> ResidueFieldElem:
        return self.element(0)

    def one(self) -> ResidueFieldElem:
        return self.element(1)

    def elements(self) -> Iterator[ResidueFieldElem]:
        """Every element, in graded lexicographic order of representatives."""
        values = [
            FpPoly(self.p, tuple(reversed(digits)))
            for digits in product(range(self.p), repeat=self.degree)
        ]
        for value in sorted(values, key=FpPoly.sort_key):
            yield ResidueFieldElem(self, value)

    def __str__(self) -> str:
        if self.degree == 1:
            return f"F_{self.p}"
        return f"F_{self.p}[x]/({self.modulus})"


@dataclass(frozen=True)
class ResidueFieldElem:
    """Element of a residue field, stored as its reduced representative."""

    field: ResidueField
    value: FpPoly

    def __post_init__(self) -> None:
        if self.value.p != self.field.p:
            raise ValueError("element and field have different characteristics")
        object.__setattr__(self, "value", self.value % self.field.modulus)

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def _coerce(self, other: Union[ResidueFieldElem, int]) -> ResidueFieldElem:
        if isinstance(other, ResidueFieldElem):
            if other.field != self.field:
                raise ValueError("elements of different residue fields")
            return other
        return self.field.element(other)

    def __add__(self, other: Union[ResidueFieldElem, int]) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, self.value + self._coerce(other).value)

    __radd__ = __add__

    def __neg__(self) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, -self.value)

    def __sub__(self, other: Union[ResidueFieldElem, int]) -> ResidueFieldElem:
        return self + (-self._coerce(other))

    def __mul__(self, other: Union[ResidueFieldElem, int]) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, self.value * self._coerce(other).value)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ResidueFieldElem:
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> ResidueFieldElem:
        if self.is_zero:
            raise ZeroDivisionError("zero has no inverse")
        # Multiplicative group has order size - 1
        return self ** (self.field.size - 2)

    def __truediv__(self, other: Union[ResidueFieldElem, int]) -> ResidueFieldElem:
        return self * self._coerce(other).inverse()

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class ResidueFieldPoly:
    """
    Polynomial in y over a residue field, lowest degree first.
    剩余域上关于 y 的多项式，低次在前。
    """

    field: ResidueField
    coeffs: tuple[ResidueFieldElem, ...] = ()

    def __post_init__(self) -> None:
        coeffs = []
        for c in self.coeffs:
            if isinstance(c, ResidueFieldElem):
                if c.field != self.field:
                    raise ValueError("coefficients must share one residue field")
                coeffs.append(c)
            else:
                coeffs.append(self.field.element(c))
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> ResidueFieldElem:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == self.field.one()

    def coefficient(self, i: int) -> ResidueFieldElem:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def sort_key(self) -> tuple:
        return self.degree, tuple(c.value.sort_key() for c in reversed(self.coeffs))

    def monic(self) -> ResidueFieldPoly:
        if self.is_zero:
            raise ZeroInputError("the zero polynomial has no monic associate")
        inverse = self.leading.inverse()
        return ResidueFieldPoly(self.field, tuple(c * inverse for c in self.coeffs))

    def __add__(self, other: ResidueFieldPoly) -> ResidueFieldPoly:
        size = max(len(self.coeffs), len(other.coeffs))
        return ResidueFieldPoly(
            self.field,
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size)),
        )

    def __neg__(self) -> ResidueFieldPoly:
        return ResidueFieldPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: ResidueFieldPoly) -> ResidueFieldPoly:
        return self + (-other)

    def __mul__(self, other: ResidueFieldPoly) -> ResidueFieldPoly:
        if self.is_zero or other.is_zero:
            return ResidueFieldPoly(self.field)
        product_coeffs = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero:
                continue
            for j, y in enumerate(other.coeffs):
                product_coeffs[i + j] = product_coeffs[i + j] + x * y
        return ResidueFieldPoly(self.field, tuple(product_coeffs))

    def __divmod__(
        self, other: ResidueFieldPoly
    ) -> tuple[ResidueFieldPoly, ResidueFieldPoly]:
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        inverse = other.leading.inverse()
        remainder = list(self.coeffs)
        d = other.degree
        if len(remainder) - 1 < d:
            return ResidueFieldPoly(self.field), self
        quotient = [self.field.zero()] * (len(remainder) - d)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            factor = remainder[shift + d] * inverse
            if factor.is_zero:
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coeffs):
                remainder[shift + i] = remainder[shift + i] - factor * c
        return (
            ResidueFieldPoly(self.field, tuple(quotient)),
            ResidueFieldPoly(self.field, tuple(remainder[:d])),
        )

    def derivative(self) -> ResidueFieldPoly:
        return ResidueFieldPoly(
            self.field, tuple(c * i for i, c in enumerate(self.coeffs) if i)
        )

    def __call__(self, value: ResidueFieldElem) -> ResidueFieldElem:
        result = self.field.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def render(self, var: str = "y") -> str:
        return format_polynomial(self.coeffs, var)

    def __str__(self) -> str:
        return self.render()
