"""Unit tests for the exponent fragment and the index-divisor test."""

import json

import pytest

from sextic_index.classes.EngstromTable import EngstromTable, load_default_table
from sextic_index.classes.IndexExceptions import FragmentMissError, UndeterminedError
from sextic_index.classes.SplittingType import SplittingType
from sextic_index.modules.index_classifier import engstrom_exponent, is_index_divisor


def _split(*entries):
    return SplittingType.of(entries)


class TestIndexDivisor:
    """p divides i(K) iff some P_f exceeds N_f."""

    def test_too_many_degree_one_primes_above_two(self):
        assert is_index_divisor(_split((1, 1), (1, 1), (1, 1), (3, 1)), 2)

    def test_totally_ramified(self):
        assert not is_index_divisor(_split((6, 1)), 2)
        assert not is_index_divisor(_split((6, 1)), 3)

    def test_three_quadratic_primes_above_two(self):
        # N_2 = 1 over F_2
        assert is_index_divisor(_split((1, 2), (1, 2), (1, 2)), 2)
        assert not is_index_divisor(_split((1, 2), (1, 2), (1, 2)), 3)

    def test_undetermined(self):
        with pytest.raises(UndeterminedError):
            is_index_divisor(SplittingType.undetermined(), 2)


class TestExponent:
    """Lookups in the shipped fragment."""

    def test_zero_when_not_a_divisor(self):
        assert engstrom_exponent(_split((2, 1), (2, 2)), 2) == 0

    def test_encoded_entry(self):
        assert engstrom_exponent(_split((1, 2), (1, 2), (1, 2)), 2) == 2
        assert engstrom_exponent(_split((1, 2), (2, 2)), 2) == 1

    def test_rule_for_three(self):
        splitting = _split((1, 1), (1, 1), (1, 1), (1, 1), (2, 1))
        assert engstrom_exponent(splitting, 3) == 1

    def test_five_never_divides(self):
        assert load_default_table().lookup(5, _split(*[(1, 1)] * 6)) == 0

    def test_missing_entry(self):
        with pytest.raises(FragmentMissError, match="exponent fragment"):
            engstrom_exponent(_split(*[(1, 1)] * 6), 2)

    def test_entries_order_does_not_matter(self):
        assert _split((2, 2), (1, 2)) == _split((1, 2), (2, 2))


class TestFragmentFile:
    """Loading custom fragments."""

    def test_custom_table(self, tmp_path):
        path = tmp_path / "fragment.json"
        path.write_text(
            json.dumps(
                {
                    "entries": [
                        {"prime": 2, "splitting": [[1, 1]] * 6, "exponent": 4}
                    ],
                    "rules": [],
                }
            ),
            encoding="utf-8",
        )
        table = EngstromTable.from_file(str(path))
        assert engstrom_exponent(_split(*[(1, 1)] * 6), 2, table) == 4

    def test_shipped_entries_cite_their_case(self):
        table = load_default_table()
        for item in [*table.entries, *table.rules]:
            assert item.provenance.startswith("proof of Thm "), item
            assert "nu_" in item.provenance

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ValueError):
            EngstromTable.from_file(str(path))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValueError):
            EngstromTable.from_file(str(tmp_path / "absent.json"))

    def test_entry_degree_is_checked(self, tmp_path):
        path = tmp_path / "short.json"
        path.write_text(
            json.dumps({"entries": [{"prime": 2, "splitting": [[1, 1]], "exponent": 1}]}),
            encoding="utf-8",
        )
        with pytest.raises(ValueError):
            EngstromTable.from_file(str(path))


if __name__ == "__main__":
    pytest.main([__file__])
