"""
Batch classification over a box of (a, b) with a CSV report.
在 (a, b) 区域内批量分类并输出 CSV。
"""

from __future__ import annotations

import csv
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional, TextIO

from sextic_index.classes.IndexExceptions import ReducibleInputError, ScopeError
from sextic_index.classes.IndexReport import ScanRow
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.modules.const import SCAN_COLUMNS
from sextic_index.modules.index_classifier import index_of_field
from sextic_index.modules.int_poly import is_irreducible, is_reduced
from sextic_index.modules.oracle import verify_report
from sextic_index.modules.rich_utils import ScanProgress, print_warning, set_quiet


def scan_row(a: int, b: int, verify: bool = False) -> Optional[ScanRow]:
    """
    Row for one pair, or None when (a, b) is not reduced or F is reducible.
    单个 (a, b) 的扫描行；未约化或可约时返回 None。
    """
    if b == 0:
        return None
    t = Trinomial(a, b)
    if not is_reduced(t) or not is_irreducible(t):
        return None
    try:
        report = index_of_field(t)
    except ReducibleInputError:
        return None
    except ScopeError as e:
        print_warning(f"{t}: {type(e).__name__}: {e}")
        return ScanRow(a=a, b=b, verify_status=f"error:{type(e).__name__}")

    status = "skipped"
    if verify:
        verdicts = verify_report(t, report)
        status = "agree" if all(v.agrees for v in verdicts) else "disagree"
    return ScanRow.from_report(report, status)


def _scan_column(a: int, b_min: int, b_max: int, verify: bool) -> list[ScanRow]:
    rows = (scan_row(a, b, verify) for b in range(b_min, b_max + 1))
    return [row for row in rows if row is not None]


def scan_rows(
    a_min: int,
    a_max: int,
    b_min: int,
    b_max: int,
    verify: bool = False,
    jobs: int = 1,
) -> list[ScanRow]:
    """
    Rows for every reduced irreducible pair in the box, in lexicographic
    (a, b) order for any job count.
    区域内所有已约化且不可约的 (a, b)，按字典序排列，与并行度无关。
    """
    if a_min > a_max or b_min > b_max:
        raise ValueError(f"empty scan box a={a_min}..{a_max}, b={b_min}..{b_max}")
    if jobs < 1:
        raise ValueError(f"jobs must be positive, got {jobs}")

    columns = list(range(a_min, a_max + 1))
    results: list[list[ScanRow]] = []
    with ScanProgress() as progress:
        progress.start(len(columns))
        if jobs == 1:
            for a in columns:
                results.append(_scan_column(a, b_min, b_max, verify))
                progress.advance()
        else:
            # workers are silent; map keeps the submission order
            with ProcessPoolExecutor(
                max_workers=jobs, initializer=set_quiet, initargs=(True,)
            ) as pool:
                chunks = pool.map(
                    _scan_column,
                    columns,
                    [b_min] * len(columns),
                    [b_max] * len(columns),
                    [verify] * len(columns),
                )
                for chunk in chunks:
                    results.append(chunk)
                    progress.advance()
    return [row for chunk in results for row in chunk]


def index_counts(rows: Iterable[ScanRow]) -> Counter[int]:
    return Counter(row.index for row in rows if row.index is not None)


def write_scan(rows: list[ScanRow], stream: TextIO) -> None:
    """
    Header, one line per row, then `# index=<v>,count=<n>` lines in ascending
    index order and `# total=<n>`.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for row in rows:
        writer.writerow(row.to_csv_fields())
    counts = index_counts(rows)
    for index in sorted(counts):
        stream.write(f"# index={index},count={counts[index]}\n")
    stream.write(f"# total={len(rows)}\n")
