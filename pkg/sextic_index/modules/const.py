import math
import os
from typing import Union

# Valuation of zero; every other valuation is a nonnegative int
# 零的赋值；其他赋值均为非负整数
INFINITY = math.inf
Valuation = Union[int, float]

# Number of small primes tried for mod-p irreducibility certificates
# 用于模p不可约性证书的小素数个数
CERTIFICATE_PRIME_COUNT = 25

# Trial-division bound used when certifying condition (iv) of the maximality test
# 检验极大性条件(iv)时的试除上界
TRIAL_DIVISION_LIMIT = 10**6

# Brute-force enumerations over finite fields stop above this many elements
# 有限域穷举的元素个数上限
BRUTE_FORCE_FIELD_LIMIT = 5**6

# Primes whose splitting the classifier reports
# 分类器报告分解的素数
INDEX_PRIMES = (2, 3, 5)

# Every possible field index of x^6 + a*x^5 + b
# x^6 + a*x^5 + b 的所有可能域指数
POSSIBLE_INDICES = (1, 2, 3, 4, 6, 12)

# Key order of the classify document
# classify 文档的键顺序
REPORT_KEYS = (
    "input",
    "nu2",
    "nu3",
    "nu5",
    "index",
    "matched_rules",
    "splitting_at",
    "maximal_order_is_Zalpha",
    "monogenic_obstruction",
)

# Column order of the scan CSV
# 扫描CSV的列顺序
SCAN_COLUMNS = (
    "a",
    "b",
    "nu2",
    "nu3",
    "nu5",
    "index",
    "matched_rules",
    "maximal_order_is_Zalpha",
    "verify_status",
)

# CLI exit codes
# 命令行退出码
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_SCOPE_ERROR = 3

# Reference fields and their known indices
# 参考域及其已知指数
REFERENCE_EXAMPLES = (
    ((288, 154), 1),
    ((18, 33), 2),
    ((-42, -1258), 3),
    ((144, 399), 4),
    ((54, 377), 6),
    ((360, 35), 12),
)

# Congruence families with a known index: (family id, modulus, (a, b) residues, index)
# 已知指数的同余族：(族编号, 模数, (a, b) 剩余类, 指数)
CONGRUENCE_FAMILIES = (
    (
        "Cor-2",
        96,
        (
            (14, 1),
            (14, 33),
            (22, 25),
            (22, 57),
            (38, 9),
            (38, 41),
            (46, 1),
            (46, 33),
            (62, 17),
            (62, 49),
        ),
        2,
    ),
    ("Cor-3", 72, tuple((0, r) for r in (8, 17, 26, 44, 62)), 3),
    (
        "Cor-4",
        72,
        tuple(
            (0, r)
            for r in (3, 7, 11, 15, 19, 23, 27, 31, 39, 43, 51, 55, 59, 63, 67)
        ),
        4,
    ),
    ("Cor-5", 288, ((54, 89), (126, 17), (198, 233), (270, 161)), 6),
    ("Cor-6", 72, ((0, 71), (0, 35)), 12),
)

# Index-one family: a = 0 mod 72 and b mod 72 outside this set
# 指数为1的族：a = 0 mod 72 且 b mod 72 不在此集合中
TRIVIAL_FAMILY_ID = "Cor-1"
TRIVIAL_FAMILY_EXCLUDED_B = frozenset(
    {71, 3, 7, 8, 11, 15, 17, 19, 23, 26, 27, 31, 35, 39, 42, 43, 44, 47}
    | {51, 53, 55, 59, 62, 63, 67}
)

# Shipped exponent fragment
# 随包发布的指数片段表
ENGSTROM_FRAGMENT_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    "config",
    "engstrom_fragment.json",
)
