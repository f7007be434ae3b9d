"""
Closed-form index criteria for x^6 + a*x^5 + b and assembly of the field index.
x^6 + a*x^5 + b 的闭式指数判据与域指数的汇总。

The congruence criteria decide v_2(i(K)) and v_3(i(K)) directly; the polygon
route (ore_analyze, is_index_divisor, engstrom_exponent) decides the same
exponents from the splitting of p and is used to cross-check them.
"""

from __future__ import annotations

from math import gcd
from typing import Any, Callable, Optional

from sympy import factorint, isprime, perfect_power

from sextic_index.classes.EngstromTable import EngstromTable, load_default_table
from sextic_index.classes.IndexExceptions import (
    ClassifierContradictionError,
    FragmentMissError,
    IndeterminateConditionError,
    InvalidPrimeError,
    ReducibleInputError,
    UndeterminedError,
)
from sextic_index.classes.IndexReport import IndexReport, ValuationQuadruple
from sextic_index.classes.SplittingType import OreOutcome, SplittingType
from sextic_index.classes.Trinomial import Trinomial
from sextic_index.modules.const import (
    CONGRUENCE_FAMILIES,
    INDEX_PRIMES,
    TRIAL_DIVISION_LIMIT,
    TRIVIAL_FAMILY_EXCLUDED_B,
    TRIVIAL_FAMILY_ID,
)
from sextic_index.modules.finite_field import count_monic_irreducibles
from sextic_index.modules.int_poly import (
    is_irreducible,
    reduce_trinomial,
    trinomial_poly,
    unit_part,
    valuation,
)
from sextic_index.modules.ore_engine import (
    ore_analyze,
    prime_count_upper_bound,
    proposition5_shift,
    regular_integer,
)
from sextic_index.modules.report_utils import outcome_document
from sextic_index.modules.rich_utils import print_warning
from sextic_index.modules.utils import require_prime

Case = tuple[int, Optional[str]]

# Residues (a, b) mod 9 allowed when 3 | a and 3 does not divide b
_MOD9_MAXIMAL = frozenset(
    {(0, 2), (0, 4), (0, 5), (0, 7), (3, 8), (3, 1), (3, 4), (3, 7)}
    | {(6, 8), (6, 1), (6, 4), (6, 7)}
)

# Composite cofactors below this bound with no prime factor under the
# trial-division limit have at most two prime factors
_TWO_FACTOR_BOUND = TRIAL_DIVISION_LIMIT**3


# ----------------------------------------------------------------------
# Maximality of Z[alpha]
# ----------------------------------------------------------------------


def _maximality_discriminant(t: Trinomial) -> int:
    return 6**6 * t.b - 5**5 * t.a**6


def theorem1_local_condition(t: Trinomial, p: int) -> bool:
    """
    Whether p does not divide (Z_K : Z[alpha]), from the congruence conditions.
    p 是否不整除 (Z_K : Z[alpha])。
    """
    require_prime(p)
    a, b = t.a, t.b
    if b % p == 0:
        return valuation(p, b) == 1
    if a % p == 0:
        if p == 2:
            return (a % 4, b % 4) in {(0, 1), (2, 3)}
        if p == 3:
            return (a % 9, b % 9) in _MOD9_MAXIMAL
        return True
    d = _maximality_discriminant(t)
    if d % p == 0:
        return valuation(p, d) <= 1
    return True


def _coprime_part(n: int, m: int) -> int:
    """Largest divisor of n sharing no prime with m (m = 0 shares every prime)."""
    n = abs(n)
    g = gcd(n, m)
    while g > 1:
        n //= g
        g = gcd(n, m)
    return n


def _is_squarefree(n: int, condition: str) -> bool:
    """
    Whether |n| is squarefree, by bounded trial division.

    Raises:
        IndeterminateConditionError: when a large cofactor cannot be certified
    """
    n = abs(n)
    if n <= 1:
        return True

    factors = factorint(n, limit=TRIAL_DIVISION_LIMIT)
    undecided = []
    for q, exponent in factors.items():
        if exponent >= 2:
            return False
        if isprime(q):
            continue
        if perfect_power(q) or any(gcd(q, r) > 1 for r in factors if r != q):
            return False
        if q >= _TWO_FACTOR_BOUND:
            undecided.append(q)

    if undecided:
        raise IndeterminateConditionError(
            condition,
            f"cannot certify that {undecided[0]} is squarefree"
            f" / 无法确认 {undecided[0]} 无平方因子",
        )
    return True


def _condition_iv(t: Trinomial) -> bool:
    """p^2 does not divide 6^6 b - 5^5 a^6 for every prime p dividing it but not ab."""
    return _is_squarefree(_coprime_part(_maximality_discriminant(t), t.a * t.b), "iv")


def theorem1_is_maximal(t: Trinomial) -> tuple[bool, frozenset[str]]:
    """
    Whether Z[alpha] is the ring of integers, with every violated condition id.
    Z[alpha] 是否为整数环，并返回所有不满足的条件编号。

    Raises:
        IndeterminateConditionError: when no condition fails and (i) or (iv) cannot be decided
    """
    a, b = t.a, t.b
    violated = set()
    undecided: list[IndeterminateConditionError] = []
    if a % 2 == 0 and b % 2 and (a % 4, b % 4) not in {(0, 1), (2, 3)}:
        violated.add("ii")
    if a % 3 == 0 and b % 3 and (a % 9, b % 9) not in _MOD9_MAXIMAL:
        violated.add("iii")
    checks: tuple[tuple[str, Callable[[], bool]], ...] = (
        ("i", lambda: _is_squarefree(b, "i")),
        ("iv", lambda: _condition_iv(t)),
    )
    for condition, check in checks:
        try:
            if not check():
                violated.add(condition)
        except IndeterminateConditionError as e:
            undecided.append(e)
    if undecided and not violated:
        raise undecided[0]
    return not violated, frozenset(violated)


# ----------------------------------------------------------------------
# Valuations and the shift clause
# ----------------------------------------------------------------------


def valuation_quadruple(t: Trinomial, p: int) -> ValuationQuadruple:
    """
    u = v_p(5a+6), v = v_p(a+b+1), and for p = 3 also mu = v_3(5a-6),
    tau = v_3(-a+b+1).
    """
    a, b = t.a, t.b
    if p == 2:
        return ValuationQuadruple(2, valuation(2, 5 * a + 6), valuation(2, a + b + 1))
    if p == 3:
        return ValuationQuadruple(
            3,
            valuation(3, 5 * a + 6),
            valuation(3, a + b + 1),
            valuation(3, 5 * a - 6),
            valuation(3, -a + b + 1),
        )
    raise InvalidPrimeError(f"valuation quadruples exist for p = 2, 3 only, got {p}")


def _shift_values(t: Trinomial, s: int) -> tuple[int, int]:
    """A0 = F(s) and A1 = F'(s)."""
    return t.b + t.a * s**5 + s**6, 5 * t.a * s**4 + 6 * s**5


def _three_adic_clause(v0: Any, v1: Any, unit0: int) -> bool:
    """6 <= 2 v1 < v0 + 1, or 5 <= v0 + 1 < 2 v1 with v0 odd and unit0 = -1 mod 3."""
    if 6 <= 2 * v1 < v0 + 1:
        return True
    return 5 <= v0 + 1 < 2 * v1 and v0 % 2 == 1 and unit0 % 3 == 2


def regular_shift_condition(t: Trinomial, s: int, p: int = 3) -> bool:
    """
    The clause on A0 = b + a s^5 + s^6 and A1 = 5a s^4 + 6 s^5 at a regular
    integer s: v_2(A0) = 2 v_2(A1) for p = 2, the 3-adic slope clause for p = 3.
    """
    a0, a1 = _shift_values(t, s)
    v0, v1 = valuation(p, a0), valuation(p, a1)
    if p == 2:
        return v0 == 2 * v1
    if p == 3:
        return _three_adic_clause(v0, v1, unit_part(3, a0) if a0 else 0)
    raise InvalidPrimeError(f"the shift clause exists for p = 2, 3 only, got {p}")


# ----------------------------------------------------------------------
# v_2 and v_3
# ----------------------------------------------------------------------


def nu2(t: Trinomial) -> Case:
    """
    v_2(i(K)) from the 2-adic congruence criteria.
    由 2-进同余判据求 v_2(i(K))。

    Raises:
        OutsideScopeError, NonTerminatingError: from the regular-integer search
    """
    a, b = t.a, t.b
    if (a % 8, b % 8) in {(0, 3), (0, 7)}:
        return 2, "Thm2-1"

    if a % 4 == 2:
        u = int(valuation(2, 5 * a + 6))
        if (b - (-(a + 1) + 2 ** (2 * u))) % 2 ** (2 * u + 1) == 0:
            return 1, "Thm2-2"

    if (a % 4, b % 4) == (2, 1):
        quad = valuation_quadruple(t, 2)
        if quad.v < 2 * quad.u and quad.v % 2 == 0:
            s = regular_integer(trinomial_poly(t), 2, 1)
            if regular_shift_condition(t, s, 2):
                return 1, "Thm2-3"

    return 0, None


def nu3(t: Trinomial) -> Case:
    """
    v_3(i(K)) from the 3-adic congruence criteria, first matching case wins.
    由 3-进同余判据求 v_3(i(K))，取第一个满足的情形。

    Raises:
        OutsideScopeError, NonTerminatingError: from the regular-integer search
    """
    a, b = t.a, t.b
    f = trinomial_poly(t)
    shifts: dict[int, int] = {}

    def shifted(z: int) -> Callable[[], bool]:
        def check() -> bool:
            if z not in shifts:
                shifts[z] = regular_integer(f, 3, z)
            return regular_shift_condition(t, shifts[z], 3)

        return check

    s_minus, s_plus = shifted(2), shifted(1)
    minus_family = (b - (a - 1)) % 81 == 0
    plus_family = (b - (-a - 1)) % 81 == 0

    if (a % 9, b % 9) == (0, 8):
        return 1, "Thm3-1"

    if a % 27 == 12 and minus_family:
        mu, tau = valuation(3, 5 * a - 6), valuation(3, -a + b + 1)
        if _three_adic_clause(tau, mu, unit_part(3, -a + b + 1)):
            return 1, "Thm3-2"

    if (a % 81, b % 81) in {(21, 74), (48, 20), (75, 47)} and s_minus():
        return 1, "Thm3-3"

    if a % 27 == 3 and minus_family and s_minus():
        return 1, "Thm3-4"

    if a % 27 == 12 and minus_family:
        mu, tau = valuation(3, 5 * a - 6), valuation(3, -a + b + 1)
        # (5a - 6)_3 = +-1 mod 3 always holds
        if 2 * mu == tau + 1 and unit_part(3, -a + b + 1) % 3 == 1 and s_minus():
            return 1, "Thm3-5"

    if a % 27 == 15 and plus_family:
        u, v = valuation(3, 5 * a + 6), valuation(3, a + b + 1)
        if _three_adic_clause(v, u, unit_part(3, a + b + 1)):
            return 1, "Thm3-6"

    if (a % 81, b % 81) in {(6, 47), (33, 20), (60, 74)} and s_plus():
        return 1, "Thm3-7"

    if a % 27 == 24 and plus_family and s_plus():
        return 1, "Thm3-8"

    if a % 27 == 15 and plus_family:
        u, v = valuation(3, 5 * a + 6), valuation(3, a + b + 1)
        # (5a + 6)_3 = +-1 mod 3 always holds
        if 2 * u == v + 1 and unit_part(3, a + b + 1) % 3 == 1 and s_plus():
            return 1, "Thm3-9"

    return 0, None


# ----------------------------------------------------------------------
# Polygon route
# ----------------------------------------------------------------------


def is_index_divisor(splitting: SplittingType, p: int) -> bool:
    """
    p divides i(K) iff P_f > N_f for some residue degree f.
    当且仅当存在 f 使 P_f > N_f 时 p 整除 i(K)。

    Raises:
        UndeterminedError: for an undetermined splitting
    """
    require_prime(p)
    if not splitting.determined:
        raise UndeterminedError(f"the splitting of {p} is undetermined / {p} 的分解类型未定")
    return any(
        count > count_monic_irreducibles(p, f)
        for f, count in splitting.residue_degree_counts().items()
    )


def engstrom_exponent(
    splitting: SplittingType, p: int, table: Optional[EngstromTable] = None
) -> int:
    """
    v_p(i(K)) for a splitting type: 0 when P_f <= N_f for every f, otherwise
    read from the encoded exponent fragment.

    Raises:
        UndeterminedError: for an undetermined splitting
        FragmentMissError: when the type is outside the fragment
    """
    if not is_index_divisor(splitting, p):
        return 0
    exponent = (table or load_default_table()).lookup(p, splitting)
    if exponent is None:
        raise FragmentMissError(
            f"splitting {splitting} of {p} is not in the exponent fragment"
            f" / 分解类型不在指数表片段中"
        )
    return exponent


def splitting_outcome(t: Trinomial, p: int) -> OreOutcome:
    """ore_analyze at p, with the shifted factor analysis for p = 5 when it applies."""
    if p == 5:
        shifted = proposition5_shift(t)
        if shifted is not None:
            return shifted
    return ore_analyze(trinomial_poly(t), p)


def nu5(t: Trinomial) -> int:
    """
    Always 0; the polygon analysis at 5 is checked against the counts N_f.

    Raises:
        ClassifierContradictionError: when the analysis at 5 has P_f > N_f
    """
    return _checked_nu5(t, splitting_outcome(t, 5))


def _checked_nu5(t: Trinomial, outcome: OreOutcome) -> int:
    for f in range(1, 7):
        if outcome.regular:
            count = outcome.splitting.count(f)
        elif f == 1:
            count = prime_count_upper_bound(outcome, f)
        else:
            continue
        if count > count_monic_irreducibles(5, f):
            raise ClassifierContradictionError(
                f"{t}: {count} primes of degree {f} above 5 exceed N_{f}"
            )
    return 0


# ----------------------------------------------------------------------
# Assembly
# ----------------------------------------------------------------------


def corollary_fast_path(t: Trinomial) -> Optional[tuple[int, str]]:
    """
    Index of the congruence families with a known index, None outside them.
    已知指数的同余族的快速判定。
    """
    a, b = t.a, t.b
    for family_id, modulus, residues, index in CONGRUENCE_FAMILIES:
        if (a % modulus, b % modulus) in residues:
            return index, family_id
    if a % 72 == 0 and b % 72 not in TRIVIAL_FAMILY_EXCLUDED_B:
        return 1, TRIVIAL_FAMILY_ID
    return None


def index_of_field(t: Trinomial) -> IndexReport:
    """
    Field index of Q(alpha) with provenance.
    计算 Q(alpha) 的域指数及其来源。

    Raises:
        ReducibleInputError: when F is reducible
        ScopeError subclasses: when a criterion cannot be decided
    """
    reduced = reduce_trinomial(t)
    if not is_irreducible(reduced):
        raise ReducibleInputError(f"{reduced} is reducible over Q / 在 Q 上可约")

    v2, case2 = nu2(reduced)
    v3, case3 = nu3(reduced)
    outcomes = {p: splitting_outcome(reduced, p) for p in INDEX_PRIMES}
    v5 = _checked_nu5(reduced, outcomes[5])
    index = 2**v2 * 3**v3

    rules: list[tuple[str, str]] = []
    if case2:
        rules.append(("nu2", case2))
    if case3:
        rules.append(("nu3", case3))

    fast = corollary_fast_path(reduced)
    if fast is not None:
        if fast[0] != index:
            raise ClassifierContradictionError(
                f"{reduced}: family {fast[1]} gives index {fast[0]}, criteria give {index}"
            )
        rules.append(("corollary", fast[1]))

    maximal: Optional[bool]
    try:
        maximal, _ = theorem1_is_maximal(reduced)
    except IndeterminateConditionError as e:
        print_warning(f"{reduced}: condition ({e.condition}) undecided: {e}")
        maximal = None
    if maximal and index > 1:
        raise ClassifierContradictionError(
            f"{reduced}: Z[alpha] is maximal but the index is {index}"
        )
    if index > 1:
        maximal = False

    return IndexReport(
        input=reduced,
        nu2=v2,
        nu3=v3,
        nu5=v5,
        index=index,
        matched_rules=tuple(rules),
        splitting_at={p: outcome.splitting for p, outcome in outcomes.items()},
        maximal_order_is_Zalpha=maximal,
        monogenic_obstruction=index > 1,
    )


def explain(t: Trinomial) -> dict[str, Any]:
    """
    Valuations, maximality, per-prime polygons with their residuals, and the
    congruence family when one applies.
    赋值、各素数的多边形与剩余多项式，以及匹配的情形。
    """
    reduced = reduce_trinomial(t)
    try:
        maximal, violated = theorem1_is_maximal(reduced)
        maximality: dict[str, Any] = {
            "maximal": maximal,
            "violated": sorted(violated),
        }
    except IndeterminateConditionError as e:
        maximality = {"maximal": None, "undecided": e.condition}

    return {
        "reduced": reduced.to_document(),
        "valuations": {
            str(p): valuation_quadruple(reduced, p).to_document() for p in (2, 3)
        },
        "maximality": maximality,
        "local_maximality": {
            str(p): theorem1_local_condition(reduced, p) for p in INDEX_PRIMES
        },
        "primes": {
            str(p): outcome_document(splitting_outcome(reduced, p)) for p in INDEX_PRIMES
        },
        "fast_path": list(corollary_fast_path(reduced) or ()),
    }
