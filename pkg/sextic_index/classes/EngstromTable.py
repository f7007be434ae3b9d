"""
Encoded fragment of the exponent table nu_p(i(K)) by splitting type.
按分解类型编码的 nu_p(i(K)) 指数表片段。
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sextic_index.classes.SplittingType import SplittingType
from sextic_index.modules.const import ENGSTROM_FRAGMENT_PATH


@dataclass(frozen=True)
class FragmentEntry:
    """
    An exact splitting type with its exponent.
    精确分解类型及其指数。
    """

    prime: int
    splitting: SplittingType
    exponent: int
    provenance: str

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"Invalid exponent: {self.exponent}")
        if self.splitting.degree != 6:
            raise ValueError(f"Splitting {self.splitting} does not have degree 6")


@dataclass(frozen=True)
class FragmentRule:
    """
    A family of splitting types: at least N primes of residue degree one.
    分解类型族：至少 N 个剩余次数为一的素理想。
    """

    prime: int
    min_degree_one_primes: int
    exponent: int
    provenance: str

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"Invalid exponent: {self.exponent}")
        if not 1 <= self.min_degree_one_primes <= 6:
            raise ValueError(
                f"Invalid min_degree_one_primes: {self.min_degree_one_primes}"
            )

    def matches(self, splitting: SplittingType) -> bool:
        return splitting.count(1) >= self.min_degree_one_primes


class EngstromTable:
    """
    Lookup of nu_p(i(K)) for the splitting types the classifier can produce.
    分类器可能产生的分解类型的 nu_p(i(K)) 查询表。
    """

    def __init__(
        self,
        entries: list[FragmentEntry],
        rules: list[FragmentRule],
        zero_primes: frozenset[int],
    ):
        self.entries = entries
        self.rules = rules
        self.zero_primes = zero_primes

    @classmethod
    def from_file(cls, path: str) -> EngstromTable:
        """
        Load the fragment from a JSON file.
        从JSON文件加载片段表。

        Raises:
            ValueError: when the file is malformed
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)

            entries = [
                FragmentEntry(
                    prime=item["prime"],
                    splitting=SplittingType.of(
                        tuple(pair) for pair in item["splitting"]
                    ),
                    exponent=item["exponent"],
                    provenance=item.get("provenance", ""),
                )
                for item in data.get("entries", [])
            ]
            rules = [
                FragmentRule(
                    prime=item["prime"],
                    min_degree_one_primes=item["min_degree_one_primes"],
                    exponent=item["exponent"],
                    provenance=item.get("provenance", ""),
                )
                for item in data.get("rules", [])
            ]
            zero_primes = frozenset(data.get("zero_primes", []))
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
            raise ValueError(f"Malformed exponent fragment {path}: {e}") from e

        return cls(entries, rules, zero_primes)

    def lookup(self, prime: int, splitting: SplittingType) -> Optional[int]:
        """Exponent of an encoded (prime, splitting) pair, None outside the fragment."""
        if prime in self.zero_primes:
            return 0
        for entry in self.entries:
            if entry.prime == prime and entry.splitting == splitting:
                return entry.exponent
        for rule in self.rules:
            if rule.prime == prime and rule.matches(splitting):
                return rule.exponent
        return None


@lru_cache(maxsize=1)
def load_default_table() -> EngstromTable:
    """The shipped fragment, loaded once."""
    return EngstromTable.from_file(ENGSTROM_FRAGMENT_PATH)
