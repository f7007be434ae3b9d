from functools import lru_cache

from sympy import Poly, Symbol, factorint, isprime, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.polyerrors import PolynomialError

from sextic_index.classes.IndexExceptions import (
    InvalidPolynomialError,
    InvalidPrimeError,
)
from sextic_index.classes.ZPoly import ZPoly


@lru_cache(maxsize=512)
def _is_prime(p: int) -> bool:
    return bool(isprime(p))


def require_prime(p: int) -> None:
    """
    Raise InvalidPrimeError unless p is a prime number.
    若 p 不是素数则抛出 InvalidPrimeError。
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not _is_prime(p):
        raise InvalidPrimeError(f"{p!r} is not a prime / {p!r} 不是素数")


def mobius(n: int) -> int:
    """Moebius function of a positive integer."""
    if n < 1:
        raise ValueError(f"mobius is defined for positive integers, got {n}")
    exponents = factorint(n).values()
    if any(e > 1 for e in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def parse_polynomial(text: str) -> ZPoly:
    """
    Parse an integer polynomial in x such as "x^2 + x + 1" or "x-3".
    解析关于 x 的整系数多项式。

    Raises:
        InvalidPolynomialError: when the text is not an integer polynomial in x
    """
    x = Symbol("x")
    try:
        expr = sympify(text.replace("^", "**"), locals={"x": x})
        poly = Poly(expr, x)
    except (SympifyError, PolynomialError, TypeError, SyntaxError) as e:
        raise InvalidPolynomialError(
            f"cannot parse {text!r} as a polynomial in x / 无法解析多项式: {e}"
        ) from e

    coeffs = poly.all_coeffs()
    if not all(c.is_integer for c in coeffs):
        raise InvalidPolynomialError(
            f"{text!r} does not have integer coefficients / 系数必须为整数"
        )
    return ZPoly(tuple(int(c) for c in reversed(coeffs)))
