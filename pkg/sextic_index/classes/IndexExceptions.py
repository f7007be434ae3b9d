"""
Exception classes and structured document types for the sextic index tool.

This module defines the exception hierarchy raised by the arithmetic layers
and the TypedDict shapes of the documents the CLI prints.
"""

from typing import Any, TypedDict


class TrinomialDocument(TypedDict):
    """Serialized trinomial (a, b)."""

    a: int
    b: int


class IndexDocument(TypedDict, total=False):
    """Structured type for the IndexReport document printed by `classify`."""

    input: TrinomialDocument
    nu2: int
    nu3: int
    nu5: int
    index: int
    matched_rules: list[list[str]]
    splitting_at: dict[str, dict[str, Any]]
    maximal_order_is_Zalpha: bool | None
    monogenic_obstruction: bool
    explain: dict[str, Any]
    verification: list[dict[str, Any]]


class SexticIndexError(Exception):
    """Base exception for every error raised by the tool."""

    pass


class InputError(SexticIndexError):
    """Base class for invalid or out-of-domain input (CLI exit code 2)."""

    pass


class ScopeError(SexticIndexError):
    """Base class for inputs the classifier cannot decide (CLI exit code 3)."""

    pass


class InvalidPrimeError(InputError):
    """Raised when a modulus that must be prime is not."""

    pass


class ZeroInputError(InputError):
    """Raised when an operation needs a nonzero integer or polynomial."""

    pass


class ReducibleInputError(InputError):
    """Raised when x^6 + a*x^5 + b is reducible over Q (including b = 0)."""

    pass


class NonMonicModulusError(InputError):
    """Raised when a phi-expansion is requested for a non-monic phi."""

    pass


class DegenerateInputError(InputError):
    """Raised when a Newton polygon is requested for a constant polynomial."""

    pass


class InvalidSideError(InputError):
    """Raised when a side does not belong to the polygon it is paired with."""

    pass


class IrrelevantModulusError(InputError):
    """Raised when phi is not an irreducible factor of F modulo p."""

    pass


class InvalidPolynomialError(InputError):
    """Raised when F is not monic of degree 6 or not squarefree."""

    pass


class TooLargeError(InputError):
    """Raised when a brute-force enumeration would exceed its bound."""

    pass


class OutsideScopeError(ScopeError):
    """Raised when a residual configuration has no known regular shift."""

    pass


class NonTerminatingError(ScopeError):
    """Raised when the regular-integer search exceeds its iteration cap."""

    pass


class UndeterminedError(ScopeError):
    """Raised when an operation needs a determined splitting type."""

    pass


class FragmentMissError(ScopeError):
    """Raised when a splitting type is outside the encoded exponent fragment."""

    pass


class IndeterminateConditionError(ScopeError):
    """Raised when a maximality condition cannot be certified either way."""

    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


class ClassifierContradictionError(SexticIndexError):
    """Raised when two independent routes disagree (an implementation bug)."""

    pass
