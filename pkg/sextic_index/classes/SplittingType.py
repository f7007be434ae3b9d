"""
Splitting types and the per-prime outcome of the polygon analysis.
分解类型与多边形分析的逐素数结果。
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from sextic_index.classes.NewtonPolygon import NewtonPolygon, PhiExpansion, Side
from sextic_index.classes.ResidueField import ResidueFieldPoly
from sextic_index.classes.ZPoly import ZPoly


@dataclass(frozen=True)
class SplittingType:
    """
    Multiset of (e, f) pairs, kept sorted by (f, e).
    (e, f) 对的多重集，按 (f, e) 排序。
    """

    entries: tuple[tuple[int, int], ...] = ()
    determined: bool = True

    def __post_init__(self) -> None:
        entries = tuple(sorted((tuple(entry) for entry in self.entries), key=_by_f_then_e))
        for e, f in entries:
            if e < 1 or f < 1:
                raise ValueError(f"invalid splitting entry {(e, f)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, entries: Iterable[tuple[int, int]]) -> SplittingType:
        return cls(tuple(entries))

    @classmethod
    def undetermined(cls) -> SplittingType:
        return cls((), determined=False)

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.entries)

    def residue_degree_counts(self) -> Counter[int]:
        """P_f for every residue degree f that occurs."""
        return Counter(f for _, f in self.entries)

    def count(self, f: int) -> int:
        return sum(1 for _, g in self.entries if g == f)

    def to_document(self) -> dict:
        return {
            "entries": [list(entry) for entry in self.entries],
            "determined": self.determined,
        }

    def __str__(self) -> str:
        if not self.determined:
            return "undetermined"
        return "{" + ", ".join(f"({e},{f})" for e, f in self.entries) + "}"


def _by_f_then_e(entry: tuple[int, ...]) -> tuple[int, int]:
    return entry[1], entry[0]


@dataclass(frozen=True)
class SideResidual:
    """A side with its residual polynomial and that polynomial's factorisation."""

    side: Side
    residual: ResidueFieldPoly
    factors: tuple[tuple[ResidueFieldPoly, int], ...]

    @property
    def separable(self) -> bool:
        return all(multiplicity == 1 for _, multiplicity in self.factors)


@dataclass(frozen=True)
class PhiAnalysis:
    """
    Polygon data gathered for one irreducible factor phi of F mod p.
    F mod p 的一个不可约因子 phi 的多边形数据。
    """

    phi: ZPoly
    multiplicity: int
    expansion: PhiExpansion
    polygon: NewtonPolygon
    residuals: tuple[SideResidual, ...]
    index: int
    shifts: tuple[int, ...] = ()
    candidates: tuple[SplittingType, ...] = ()
    note: Optional[str] = None

    @property
    def regular(self) -> bool:
        return all(item.separable for item in self.residuals)

    @property
    def entries(self) -> tuple[tuple[int, int], ...]:
        """(e, deg phi * deg psi) for every residual factor psi; meaningful when regular."""
        if self.multiplicity == 1:
            # a simple factor is one unramified prime, whatever its polygon
            return ((1, self.phi.degree),)
        result = []
        for item in self.residuals:
            for psi, _ in item.factors:
                result.append((item.side.ramification, self.phi.degree * psi.degree))
        return tuple(result)


@dataclass(frozen=True)
class OreOutcome:
    """
    Index bound and, when F is p-regular, the splitting type of p.
    指数下界，以及 F 为 p-正则时 p 的分解类型。
    """

    p: int
    index_lower_bound: int
    regular: bool
    splitting: SplittingType
    diagnostics: tuple[PhiAnalysis, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.regular and not self.splitting.determined:
            raise ValueError("a regular outcome needs a determined splitting")
