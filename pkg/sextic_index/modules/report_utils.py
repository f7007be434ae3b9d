"""
Documents for the CLI: polygon analyses, per-prime outcomes and classify output.
命令行输出文档：多边形分析、逐素数结果与 classify 输出。
"""

from __future__ import annotations

from typing import Any

from sextic_index.classes.IndexExceptions import IrrelevantModulusError
from sextic_index.classes.IndexReport import format_valuation
from sextic_index.classes.SplittingType import OreOutcome, PhiAnalysis, SideResidual
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.classes.ZPoly import ZPoly
from sextic_index.modules.int_poly import trinomial_poly
from sextic_index.modules.ore_engine import analyze_phi, factor_multiplicity
from sextic_index.modules.phi_newton import polygon_vertices, residue_field_of


def side_document(item: SideResidual) -> dict[str, Any]:
    document = item.side.to_document()
    document["residual"] = str(item.residual)
    document["factors"] = [[str(psi), multiplicity] for psi, multiplicity in item.factors]
    return document


def analysis_document(analysis: PhiAnalysis) -> dict[str, Any]:
    """One factor phi: digits, polygon, residuals, ind_phi and any candidate splittings."""
    return {
        "phi": str(analysis.phi),
        "multiplicity": analysis.multiplicity,
        "shifts": list(analysis.shifts),
        "digits": [str(digit) for digit in analysis.expansion.digits],
        "valuations": [format_valuation(u) for u in analysis.expansion.valuations],
        "vertices": [list(v) for v in polygon_vertices(analysis.polygon)],
        "sides": [side_document(item) for item in analysis.residuals],
        "index": analysis.index,
        "regular": analysis.regular,
        "candidates": [str(s) for s in analysis.candidates],
        "note": analysis.note,
    }


def outcome_document(outcome: OreOutcome) -> dict[str, Any]:
    return {
        "p": outcome.p,
        "index_lower_bound": outcome.index_lower_bound,
        "regular": outcome.regular,
        "splitting": outcome.splitting.to_document(),
        "factors": [analysis_document(item) for item in outcome.diagnostics],
    }


def polygon_report(t: Trinomial, p: int, phi: ZPoly) -> dict[str, Any]:
    """
    Full phi-analysis of F = x^6 + a x^5 + b at p for the `polygon` command.
    `polygon` 命令使用的完整 phi-分析。

    Raises:
        IrrelevantModulusError: when phi mod p is not irreducible or does not divide F mod p
        NonMonicModulusError: when phi is not monic
    """
    f = trinomial_poly(t)
    residue_field_of(phi, p)  # phi must be monic and irreducible mod p
    multiplicity = factor_multiplicity(f, phi, p)
    if multiplicity == 0:
        raise IrrelevantModulusError(
            f"{phi} does not divide {t} modulo {p} / {phi} 模 {p} 不整除 F"
        )

    document = analysis_document(analyze_phi(f, phi, p, multiplicity))
    document["polynomial"] = str(t)
    document["p"] = p
    return document
