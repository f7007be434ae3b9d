"""
Dense integer polynomials.
稠密整系数多项式。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union


def format_polynomial(coeffs: Sequence[object], var: str = "x") -> str:
    """
    Render coefficients (lowest degree first) as "x^2 + 3*x - 1".
    将系数（低次在前）渲染为多项式字符串。

    Coefficients whose text contains a space are parenthesised.
    """
    pieces: list[tuple[str, str]] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        text = str(coeffs[degree])
        if text == "0":
            continue
        negative = text.startswith("-") and " " not in text
        if negative:
            text = text[1:]
        if " " in text:
            text = f"({text})"

        if degree == 0:
            body = text
        else:
            monomial = var if degree == 1 else f"{var}^{degree}"
            body = monomial if text == "1" else f"{text}*{monomial}"
        pieces.append(("-" if negative else "+", body))

    if not pieces:
        return "0"

    sign, body = pieces[0]
    rendered = f"-{body}" if sign == "-" else body
    for sign, body in pieces[1:]:
        rendered += f" {sign} {body}"
    return rendered


@dataclass(frozen=True)
class ZPoly:
    """
    Integer polynomial, coefficients lowest degree first, no trailing zeros.
    整系数多项式，系数低次在前，无末尾零。
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def x(cls) -> ZPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> ZPoly:
        return cls((value,))

    @classmethod
    def linear(cls, root: int) -> ZPoly:
        """The monic polynomial x - root."""
        return cls((-root, 1))

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
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

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: Union[ZPoly, int]) -> ZPoly:
        other = _as_zpoly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return ZPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> ZPoly:
        return ZPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union[ZPoly, int]) -> ZPoly:
        return self + (-_as_zpoly(other))

    def __rsub__(self, other: int) -> ZPoly:
        return _as_zpoly(other) - self

    def __mul__(self, other: Union[ZPoly, int]) -> ZPoly:
        other = _as_zpoly(other)
        if self.is_zero or other.is_zero:
            return ZPoly()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                product[i + j] += x * y
        return ZPoly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ZPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ZPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod_monic(self, divisor: ZPoly) -> tuple[ZPoly, ZPoly]:
        """Euclidean division by a monic polynomial, exact over Z."""
        if not divisor.is_monic:
            raise ValueError(f"divisor {divisor} is not monic")
        remainder = list(self.coeffs)
        d = divisor.degree
        if len(remainder) - 1 < d:
            return ZPoly(), self
        quotient = [0] * (len(remainder) - d)
        for shift in range(len(remainder) - 1 - d, -1, -1):
            factor = remainder[shift + d]
            if factor == 0:
                continue
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                remainder[shift + i] -= factor * c
        return ZPoly(tuple(quotient)), ZPoly(tuple(remainder[:d]))

    def exact_quotient(self, divisor: ZPoly) -> ZPoly | None:
        """Quotient by a monic divisor, or None when the division leaves a remainder."""
        quotient, remainder = self.divmod_monic(divisor)
        return quotient if remainder.is_zero else None

    def derivative(self) -> ZPoly:
        return ZPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    # ------------------------------------------------------------------
    # Display
    # ------------------------------------------------------------------

    def render(self, var: str = "x") -> str:
        return format_polynomial(self.coeffs, var)

    def __str__(self) -> str:
        return self.render()


def _as_zpoly(value: Union[ZPoly, int]) -> ZPoly:
    if isinstance(value, ZPoly):
        return value
    return ZPoly.constant(int(value))
