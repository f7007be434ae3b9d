"""
The defining trinomial x^6 + a*x^5 + b.
定义多项式 x^6 + a*x^5 + b。
"""

from dataclasses import dataclass

from sextic_index.classes.IndexExceptions import ReducibleInputError, TrinomialDocument


@dataclass(frozen=True, order=True)
class Trinomial:
    """
    Pair (a, b) defining F(x) = x^6 + a*x^5 + b.
    定义 F(x) = x^6 + a*x^5 + b 的整数对 (a, b)。
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("b", self.b)):
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"{name} must be an integer, got {value!r}")
        if self.b == 0:
            raise ReducibleInputError(
                f"x^6 + {self.a}*x^5 is divisible by x / 常数项为零，多项式可约"
            )

    def __str__(self) -> str:
        terms = ["x^6"]
        if self.a:
            sign = "-" if self.a < 0 else "+"
            coeff = "" if abs(self.a) == 1 else f"{abs(self.a)}*"
            terms.append(f"{sign} {coeff}x^5")
        terms.append(f"{'-' if self.b < 0 else '+'} {abs(self.b)}")
        return " ".join(terms)

    def to_document(self) -> TrinomialDocument:
        return {"a": self.a, "b": self.b}
