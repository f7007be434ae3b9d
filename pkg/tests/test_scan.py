import io

import pytest

from sextic_index.classes.IndexReport import ScanRow
from sextic_index.modules.const import SCAN_COLUMNS
from sextic_index.modules.scan import index_counts, scan_row, scan_rows, write_scan


def test_scan_row_reference_field():
    row = scan_row(18, 33)
    assert row is not None
    assert (row.a, row.b) == (18, 33)
    assert row.nu2 == 1 and row.nu3 == 0 and row.nu5 == 0
    assert row.index == 2
    assert row.maximal_order_is_Zalpha is False
    assert row.verify_status == "skipped"


def test_scan_row_with_verification():
    row = scan_row(18, 33, verify=True)
    assert row is not None
    assert row.verify_status == "agree"


def test_scan_row_skips_excluded_pairs():
    # zero constant, reducible, not reduced (2 | a and 2^6 | b)
    assert scan_row(5, 0) is None
    assert scan_row(0, 1) is None
    assert scan_row(2, 128) is None


def test_small_box():
    # x^6 +- x^5 +- 1 is irreducible mod 2; x^6 +- 1 is reducible
    rows = scan_rows(-1, 1, -1, 1)
    assert [(row.a, row.b) for row in rows] == [(-1, -1), (-1, 1), (1, -1), (1, 1)]


def test_parallel_scan_keeps_order():
    serial = scan_rows(-2, 2, 1, 4)
    parallel = scan_rows(-2, 2, 1, 4, jobs=2)
    assert parallel == serial
    assert [(row.a, row.b) for row in serial] == sorted((row.a, row.b) for row in serial)


def test_empty_box():
    with pytest.raises(ValueError):
        scan_rows(1, 0, 1, 1)
    with pytest.raises(ValueError):
        scan_rows(0, 0, 1, 1, jobs=0)


def test_write_scan_footer():
    rows = [
        ScanRow(a=18, b=33, nu2=1, nu3=0, nu5=0, index=2, matched_rules="Thm2-3",
                maximal_order_is_Zalpha=False),
        ScanRow(a=1, b=2, verify_status="error:UndeterminedError"),
    ]
    stream = io.StringIO()
    write_scan(rows, stream)
    lines = stream.getvalue().splitlines()
    assert lines[0] == ",".join(SCAN_COLUMNS)
    assert lines[1] == "18,33,1,0,0,2,Thm2-3,false,skipped"
    assert lines[2] == "1,2,,,,,,,error:UndeterminedError"
    assert lines[3:] == ["# index=2,count=1", "# total=2"]
    assert index_counts(rows) == {2: 1}


if __name__ == "__main__":
    pytest.main([__file__])
