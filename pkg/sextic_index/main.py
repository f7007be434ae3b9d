"""Main CLI interface for Sextic Index."""

import json
import sys
from typing import Annotated, Any, Optional

import typer

from . import __version__
from .classes.IndexExceptions import (
    ClassifierContradictionError,
    InputError,
    ScopeError,
    SexticIndexError,
)
from .classes.Trinomial import Trinomial
from .modules import const
from .modules.index_classifier import explain, index_of_field
from .modules.oracle import verify_report
from .modules.report_utils import polygon_report
from .modules.rich_utils import (
    print_error,
    print_examples_table,
    print_header,
    print_info,
    print_polygon_report,
    print_scan_summary,
    print_step,
    print_success,
    print_version,
    print_warning,
    set_quiet,
)
from .modules.scan import index_counts, scan_rows, write_scan
from .modules.utils import parse_polynomial

# Negative coefficients such as -42 must reach the arguments, not the option parser
_NUMERIC_ARGS = {"ignore_unknown_options": True}

app = typer.Typer(
    help="Sextic Index - field index and prime splitting for x^6 + a*x^5 + b "
    "六次三项式 x^6 + a*x^5 + b 的域指数与素数分解",
    no_args_is_help=True,
)


def _echo_json(document: Any) -> None:
    typer.echo(json.dumps(document, indent=2, ensure_ascii=False))


def _exit_for(error: SexticIndexError) -> typer.Exit:
    """Print the error and map it onto the exit-code contract."""
    print_error(f"{type(error).__name__}: {error}")
    if isinstance(error, InputError):
        return typer.Exit(const.EXIT_INPUT_ERROR)
    if isinstance(error, ScopeError):
        return typer.Exit(const.EXIT_SCOPE_ERROR)
    return typer.Exit(const.EXIT_FAILURE)


@app.callback(invoke_without_command=True)
def main_callback(
    ctx: typer.Context,
    version: bool = typer.Option(
        False, "--version", "-v", help="Show version information 显示版本信息"
    ),
) -> None:
    """Sextic Index - field index and prime splitting 域指数与素数分解"""
    if version:
        print_version(__version__)
        raise typer.Exit()
    if ctx.invoked_subcommand is None:
        typer.echo(ctx.get_help())


@app.command()
def version() -> None:
    """Show version information 显示版本信息"""
    print_version(__version__)


@app.command(context_settings=_NUMERIC_ARGS)
def classify(
    a: Annotated[int, typer.Argument(help="Coefficient of x^5 五次项系数")],
    b: Annotated[int, typer.Argument(help="Constant term 常数项")],
    show_explain: Annotated[
        bool,
        typer.Option(
            "--explain", help="Add polygons, residuals and valuations 附加多边形、剩余多项式与赋值"
        ),
    ] = False,
    verify: Annotated[
        bool,
        typer.Option("--verify", help="Run every oracle cross-check 运行全部校验"),
    ] = False,
) -> None:
    """Classify the field defined by x^6 + a*x^5 + b 计算域指数"""
    set_quiet(True)
    try:
        t = Trinomial(a, b)
        report = index_of_field(t)
        document: dict[str, Any] = dict(report.to_document())
        if show_explain:
            document["explain"] = explain(t)
        disagreements = 0
        if verify:
            verdicts = verify_report(t, report)
            document["verdicts"] = [v.to_document() for v in verdicts]
            disagreements = sum(1 for v in verdicts if not v.agrees)
    except SexticIndexError as e:
        raise _exit_for(e)
    finally:
        set_quiet(False)

    _echo_json(document)
    if disagreements:
        print_error(f"{disagreements} oracle disagreement(s) 校验不一致")
        raise typer.Exit(const.EXIT_FAILURE)


@app.command(context_settings=_NUMERIC_ARGS)
def scan(
    a_min: Annotated[int, typer.Argument(help="Smallest a 最小 a")],
    a_max: Annotated[int, typer.Argument(help="Largest a 最大 a")],
    b_min: Annotated[int, typer.Argument(help="Smallest b 最小 b")],
    b_max: Annotated[int, typer.Argument(help="Largest b 最大 b")],
    verify: Annotated[
        bool,
        typer.Option("--verify", help="Cross-check every row 校验每一行"),
    ] = False,
    jobs: Annotated[
        int, typer.Option("--jobs", "-j", min=1, help="Worker processes 并行进程数")
    ] = 1,
    out: Annotated[
        Optional[str],
        typer.Option("--out", "-o", help="CSV file instead of stdout 输出CSV文件"),
    ] = None,
) -> None:
    """Classify every reduced irreducible (a, b) in a box 批量扫描"""
    # progress and summary only when stdout is not the CSV stream
    set_quiet(out is None)
    try:
        rows = scan_rows(a_min, a_max, b_min, b_max, verify=verify, jobs=jobs)
        if out is None:
            write_scan(rows, sys.stdout)
        else:
            with open(out, "w", encoding="utf-8", newline="") as handle:
                write_scan(rows, handle)
    except ValueError as e:
        print_error(f"Invalid scan box 扫描范围无效: {e}")
        raise typer.Exit(const.EXIT_INPUT_ERROR)
    except OSError as e:
        print_error(f"Cannot write 无法写入 {out}: {e}")
        raise typer.Exit(const.EXIT_FAILURE)
    except SexticIndexError as e:
        raise _exit_for(e)
    finally:
        set_quiet(False)

    if out is not None:
        print_scan_summary(
            dict(index_counts(rows)),
            len(rows),
            sum(1 for row in rows if row.verify_status == "agree") if verify else None,
        )
    if any(row.verify_status == "disagree" for row in rows):
        print_error("Oracle disagreement in scan 扫描中存在校验不一致")
        raise typer.Exit(const.EXIT_FAILURE)


@app.command(context_settings=_NUMERIC_ARGS)
def polygon(
    a: Annotated[int, typer.Argument(help="Coefficient of x^5 五次项系数")],
    b: Annotated[int, typer.Argument(help="Constant term 常数项")],
    p: Annotated[int, typer.Argument(help="Prime 素数")],
    phi: Annotated[str, typer.Argument(help='Monic factor such as "x-3" 首一因子')],
    as_json: Annotated[
        bool, typer.Option("--json", help="Print the analysis as JSON 以JSON输出")
    ] = False,
) -> None:
    """Show the phi-Newton polygon of F at p 显示 phi-牛顿多边形"""
    try:
        report = polygon_report(Trinomial(a, b), p, parse_polynomial(phi))
    except SexticIndexError as e:
        raise _exit_for(e)

    if as_json:
        _echo_json(report)
    else:
        print_polygon_report(report)


@app.command()
def examples(
    verify: Annotated[
        bool,
        typer.Option("--verify", help="Also run the oracle cross-checks 同时运行校验"),
    ] = False,
) -> None:
    """Replay the reference fields with known indices 重放参考示例"""
    print_header("Reference examples 参考示例")
    rows = []
    failures = 0
    for (a, b), expected in const.REFERENCE_EXAMPLES:
        t = Trinomial(a, b)
        print_step(str(t))
        try:
            report = index_of_field(t)
        except SexticIndexError as e:
            print_error(f"{type(e).__name__}: {e}", 1)
            rows.append((str(t), expected, None, False))
            failures += 1
            continue

        passed = report.index == expected
        if passed:
            print_success(f"index 指数 {report.index}", 1)
        else:
            print_error(f"expected 期望 {expected}, computed 计算 {report.index}", 1)

        if verify:
            verdicts = verify_report(t, report)
            bad = [v for v in verdicts if not v.agrees]
            for v in bad:
                print_error(f"{v.context}: {v.fast_value} != {v.oracle_value}", 2)
            if bad:
                passed = False
            else:
                print_info(f"{len(verdicts)} oracle checks agree 项校验一致", 1)

        rows.append((str(t), expected, report.index, passed))
        failures += not passed

    print_examples_table(rows)
    if failures:
        print_warning(f"{failures}/{len(rows)} examples failed 个示例失败")
        raise typer.Exit(const.EXIT_FAILURE)
    print_success(f"{len(rows)}/{len(rows)} examples passed 全部通过")


def cli() -> None:
    """Command line interface entry point 命令行界面入口点"""
    app()


def main() -> None:
    """Entry point for the application 应用程序入口点"""
    try:
        cli()
    except KeyboardInterrupt:
        print_error("\nOperation cancelled by user 操作被用户取消")
        sys.exit(const.EXIT_FAILURE)
    except ClassifierContradictionError as e:
        print_error(f"Internal contradiction 内部矛盾: {e}")
        sys.exit(const.EXIT_FAILURE)
    except Exception as e:
        print_error(f"Unexpected error 意外错误: {e}")
        sys.exit(const.EXIT_FAILURE)


if __name__ == "__main__":
    main()
