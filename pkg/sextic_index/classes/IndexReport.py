"""
Result records: index reports, valuation quadruples, scan rows and oracle verdicts.
结果记录：指数报告、赋值四元组、扫描行与校验结论。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from sextic_index.classes.IndexExceptions import (
    ClassifierContradictionError,
    IndexDocument,
)
from sextic_index.classes.SplittingType import SplittingType
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.modules.const import INFINITY, POSSIBLE_INDICES, SCAN_COLUMNS, Valuation


def format_valuation(value: Optional[Valuation]) -> Optional[Any]:
    """JSON-friendly valuation: INFINITY becomes the string "inf"."""
    if value is None:
        return None
    return "inf" if value == INFINITY else int(value)


@dataclass(frozen=True)
class ValuationQuadruple:
    """
    The valuations u, v, mu, tau the congruence criteria are phrased in.
    同余判据所用的赋值 u, v, mu, tau。
    """

    p: int
    u: Valuation
    v: Valuation
    mu: Optional[Valuation] = None
    tau: Optional[Valuation] = None

    def to_document(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "u": format_valuation(self.u),
            "v": format_valuation(self.v),
            "mu": format_valuation(self.mu),
            "tau": format_valuation(self.tau),
        }


@dataclass(frozen=True)
class IndexReport:
    """
    Field index of Q(alpha) and the provenance of each prime exponent.
    Q(alpha) 的域指数及各素数指数的来源。
    """

    input: Trinomial
    nu2: int
    nu3: int
    nu5: int
    index: int
    matched_rules: tuple[tuple[str, str], ...]
    splitting_at: dict[int, SplittingType] = field(default_factory=dict)
    maximal_order_is_Zalpha: Optional[bool] = None
    monogenic_obstruction: bool = False

    def __post_init__(self) -> None:
        expected = 2**self.nu2 * 3**self.nu3 * 5**self.nu5
        if self.index != expected:
            raise ClassifierContradictionError(
                f"index {self.index} differs from 2^{self.nu2}*3^{self.nu3}*5^{self.nu5}"
            )
        if self.index not in POSSIBLE_INDICES:
            raise ClassifierContradictionError(
                f"index {self.index} is not one of {POSSIBLE_INDICES}"
            )
        if self.index > 1 and not self.monogenic_obstruction:
            raise ClassifierContradictionError(
                "a nontrivial index must flag the monogenic obstruction"
            )

    def to_document(self) -> IndexDocument:
        return {
            "input": self.input.to_document(),
            "nu2": self.nu2,
            "nu3": self.nu3,
            "nu5": self.nu5,
            "index": self.index,
            "matched_rules": [list(rule) for rule in self.matched_rules],
            "splitting_at": {
                str(p): splitting.to_document()
                for p, splitting in sorted(self.splitting_at.items())
            },
            "maximal_order_is_Zalpha": self.maximal_order_is_Zalpha,
            "monogenic_obstruction": self.monogenic_obstruction,
        }


@dataclass(frozen=True)
class OracleVerdict:
    """Agreement between a fast path and its brute-force oracle."""

    context: str
    fast_value: Any
    oracle_value: Any

    @property
    def agrees(self) -> bool:
        return self.fast_value == self.oracle_value

    def to_document(self) -> dict[str, Any]:
        return {
            "context": self.context,
            "agrees": self.agrees,
            "fast_value": self.fast_value,
            "oracle_value": self.oracle_value,
        }


@dataclass(frozen=True)
class ScanRow:
    """
    One CSV row of a scan; numeric columns are None for error rows.
    扫描CSV的一行；出错行的数值列为空。
    """

    a: int
    b: int
    nu2: Optional[int] = None
    nu3: Optional[int] = None
    nu5: Optional[int] = None
    index: Optional[int] = None
    matched_rules: str = ""
    maximal_order_is_Zalpha: Optional[bool] = None
    verify_status: str = "skipped"

    @classmethod
    def from_report(cls, report: IndexReport, verify_status: str) -> ScanRow:
        return cls(
            a=report.input.a,
            b=report.input.b,
            nu2=report.nu2,
            nu3=report.nu3,
            nu5=report.nu5,
            index=report.index,
            matched_rules=";".join(case for _, case in report.matched_rules),
            maximal_order_is_Zalpha=report.maximal_order_is_Zalpha,
            verify_status=verify_status,
        )

    def to_csv_fields(self) -> list[str]:
        values = {
            "a": self.a,
            "b": self.b,
            "nu2": self.nu2,
            "nu3": self.nu3,
            "nu5": self.nu5,
            "index": self.index,
            "matched_rules": self.matched_rules,
            "maximal_order_is_Zalpha": (
                None
                if self.maximal_order_is_Zalpha is None
                else str(self.maximal_order_is_Zalpha).lower()
            ),
            "verify_status": self.verify_status,
        }
        return ["" if values[column] is None else str(values[column]) for column in SCAN_COLUMNS]
