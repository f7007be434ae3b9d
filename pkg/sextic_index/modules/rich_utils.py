"""Rich-based utility functions for clean terminal output."""

from __future__ import annotations

from types import TracebackType
from typing import Any, Iterable, Optional

from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TaskID,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

# Diagnostics go to stderr; documents and CSV rows own stdout
console = Console(width=120, stderr=True, highlight=False)

_quiet = False


def set_quiet(quiet: bool) -> None:
    """Suppress info, success and warning output (errors are always shown)."""
    global _quiet
    _quiet = quiet


def print_header(title: str) -> None:
    """Print a clean header with title."""
    if _quiet:
        return
    console.print()
    console.print(f"[bold cyan]🔬 {title}[/bold cyan]")
    console.print("=" * 80, style="cyan")
    console.print()


def print_step(title: str) -> None:
    """Print a clean step header."""
    if _quiet:
        return
    console.print()
    console.print(f"[bold cyan]{title}[/bold cyan]")
    console.print("-" * 60, style="cyan")


def print_success(message: str, indent: int = 0) -> None:
    """Print a success message with checkmark."""
    if _quiet:
        return
    indent_str = "  " * indent
    console.print(f"{indent_str}[green]✓ {message}[/green]")


def print_info(message: str, indent: int = 0) -> None:
    """Print an info message."""
    if _quiet:
        return
    indent_str = "  " * indent
    console.print(f"{indent_str}[blue]• {message}[/blue]")


def print_warning(message: str, indent: int = 0) -> None:
    """Print a warning message."""
    if _quiet:
        return
    indent_str = "  " * indent
    console.print(f"{indent_str}[yellow]⚠ {message}[/yellow]")


def print_error(message: str, indent: int = 0) -> None:
    """Print an error message."""
    indent_str = "  " * indent
    console.print(f"{indent_str}[red]✗ {message}[/red]")


def print_version(version: str) -> None:
    """Print version information."""
    console.print(
        f"[bold cyan]🔬 sextic-index {version} 六次三项式域指数计算器[/bold cyan]"
    )


def print_examples_table(rows: Iterable[tuple[str, int, Optional[int], bool]]) -> None:
    """
    Reference-example results as a table.
    参考示例结果表。

    Args:
        rows: (trinomial, expected index, computed index or None, passed)
    """
    table = Table(title="Reference examples 参考示例", pad_edge=False)
    table.add_column("F(x)", style="cyan")
    table.add_column("expected 期望", justify="right")
    table.add_column("computed 计算", justify="right")
    table.add_column("status 状态")

    for trinomial, expected, computed, passed in rows:
        status = "[green]✓ pass 通过[/green]" if passed else "[red]✗ FAIL 失败[/red]"
        table.add_row(
            trinomial, str(expected), "-" if computed is None else str(computed), status
        )
    console.print(table)


def print_polygon_report(report: dict[str, Any]) -> None:
    """
    Render one phi-polygon analysis (see report_utils.polygon_report).
    渲染一次 phi-多边形分析。
    """
    console.print(
        f"[bold]F = {report['polynomial']}[/bold]  p = {report['p']}  phi = {report['phi']}"
    )
    console.print("[cyan]Digit valuations 系数赋值:[/cyan]")
    for i, (digit, value) in enumerate(zip(report["digits"], report["valuations"])):
        console.print(f"  a_{i} = {digit}   u_{i} = {value}")

    vertices = ", ".join(f"({x},{y})" for x, y in report["vertices"])
    console.print(f"[cyan]Vertices 顶点:[/cyan] {vertices or '(empty 空)'}")
    for side in report["sides"]:
        console.print(
            f"  side 边 {tuple(side['start'])}-{tuple(side['end'])}"
            f"  slope 斜率 {side['slope']}  degree 次数 {side['degree']}"
        )
        console.print(f"    R(y) = {side['residual']}")
        factors = " * ".join(
            f"({factor})" if multiplicity == 1 else f"({factor})^{multiplicity}"
            for factor, multiplicity in side["factors"]
        )
        console.print(f"    factors 因子: {factors}")

    regular = "yes 是" if report["regular"] else "no 否"
    console.print(f"[cyan]ind_phi:[/cyan] {report['index']}   regular 正则: {regular}")


def print_scan_summary(counts: dict[int, int], total: int, verified: Optional[int]) -> None:
    """Per-index totals after a scan."""
    if _quiet:
        return
    console.print()
    console.print("=" * 60, style="green")
    table = Table(show_header=True, box=None, pad_edge=False)
    table.add_column("index 指数", style="cyan", justify="right")
    table.add_column("fields 域数", justify="right")
    for index in sorted(counts):
        table.add_row(str(index), str(counts[index]))
    console.print(table)
    console.print(f"[green]✓ {total} rows written 已写入 {total} 行[/green]")
    if verified is not None:
        console.print(f"[green]✓ {verified} rows verified 已验证 {verified} 行[/green]")


class ScanProgress:
    """Progress bar for scans, used as a context manager."""

    def __init__(self, title: str = "Scanning 扫描中"):
        self.title = title
        self.progress: Optional[Progress] = None
        self.task: Optional[TaskID] = None

    def start(self, total: int) -> None:
        """Start the progress tracker."""
        if _quiet:
            return
        self.progress = Progress(
            SpinnerColumn(style="cyan"),
            TextColumn("[cyan]{task.description}[/cyan]"),
            BarColumn(bar_width=40, style="green", complete_style="green"),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=console,
            expand=False,
        )
        self.progress.start()
        self.task = self.progress.add_task(self.title, total=total)

    def advance(self, amount: int = 1) -> None:
        if self.progress is not None and self.task is not None:
            self.progress.update(self.task, advance=amount)

    def stop(self) -> None:
        """Stop the progress tracker."""
        if self.progress:
            self.progress.stop()
            self.progress = None

    def __enter__(self) -> ScanProgress:
        return self

    def __exit__(
        self,
        exc_type: Optional[type[BaseException]],
        exc: Optional[BaseException],
        tb: Optional[TracebackType],
    ) -> None:
        self.stop()
