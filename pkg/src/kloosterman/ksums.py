"""Multi-dimensional Kloosterman sums over GF(2^r) and their power moments.

K_m(a) is the sum of lam(a1 + ... + am + a * a1^-1 * ... * am^-1) over all
m-tuples of nonzero field elements, with the m = 0 convention K_0(a) = lam(a).
Two evaluation paths are provided:

* a memoized recursion over the full table, K_m(a) = sum_x lam(x) * K_{m-1}(a/x),
  costing O(m * q^2) for the whole table (the default);
* literal (q-1)^m enumeration, kept as a brute-force oracle and gated to
  small instances.

All values are exact Python integers; no floating point anywhere.
"""

from __future__ import annotations

from itertools import product

from .field import Field

# Direct enumeration is an oracle, not a production path.
DIRECT_GATE = 1 << 24


def kloosterman_table(field: Field, m: int) -> dict[int, int]:
    """Table a -> K_m(a) over all nonzero a, by the memoized recursion."""
    if m < 0:
        raise ValueError(f"dimension must be nonnegative, got {m}")
    lam = field.lam_table()
    inv = field.inv_table()
    cur = {a: lam[a] for a in field.units()}
    for _ in range(m):
        prev = cur
        cur = {}
        for a in field.units():
            cur[a] = sum(lam[x] * prev[field.mul(a, inv[x])] for x in field.units())
    return cur


def kloosterman(field: Field, m: int, a: int) -> int:
    """Exact K_m(a) for nonzero a; K_0(a) = lam(a) by convention."""
    if m < 0:
        raise ValueError(f"dimension must be nonnegative, got {m}")
    if a == 0:
        raise ValueError("Kloosterman sums are defined for nonzero a only")
    field._check(a)
    if m == 0:
        return field.lam(a)
    return kloosterman_table(field, m)[a]


def kloosterman_direct(field: Field, m: int, a: int) -> int:
    """Brute-force K_m(a) by enumerating all (q-1)^m tuples.

    Refuses instances beyond the work gate; this path exists to check the
    recursion, not to be fast.
    """
    if m < 0:
        raise ValueError(f"dimension must be nonnegative, got {m}")
    if a == 0:
        raise ValueError("Kloosterman sums are defined for nonzero a only")
    field._check(a)
    if m == 0:
        return field.lam(a)
    work = (field.q - 1) ** m
    if work > DIRECT_GATE:
        raise ValueError(f"direct enumeration gated at {DIRECT_GATE} tuples, need {work}")
    lam = field.lam_table()
    inv = field.inv_table()
    mul = field.mul
    total = 0
    for tup in product(field.units(), repeat=m):
        s = 0
        p = 1
        for x in tup:
            s ^= x
            p = mul(p, x)
        total += lam[s ^ mul(a, inv[p])]
    return total


def k2_via_square(field: Field, a: int) -> int:
    """K_2(a) through the square identity K_2(a) = K_1(a)^2 - q."""
    if a == 0:
        raise ValueError("Kloosterman sums are defined for nonzero a only")
    return kloosterman(field, 1, a) ** 2 - field.q


def brute_moment(field: Field, m: int, h: int) -> int:
    """h-th power moment of K_m: the sum of K_m(a)^h over nonzero a."""
    if h < 0:
        raise ValueError(f"moment order must be nonnegative, got {h}")
    table = kloosterman_table(field, m)
    return sum(v ** h for v in table.values())


def value_histogram(field: Field, m: int = 1) -> dict[int, int]:
    """Multiset of attained K_m values, as value -> multiplicity."""
    hist: dict[int, int] = {}
    for v in kloosterman_table(field, m).values():
        hist[v] = hist.get(v, 0) + 1
    return hist


def range_report(field: Field) -> dict[int, int]:
    """Histogram of K_1 values, checked against the structural constraints.

    For r >= 2 every attained value t must satisfy |t| < 2*sqrt(q) and
    t = -1 (mod 4); multiplicities are reported as observed, with no claim
    about their arithmetic meaning.
    """
    if field.r < 2:
        raise ValueError("range constraints apply only for r >= 2")
    hist = value_histogram(field, 1)
    q = field.q
    for t, count in hist.items():
        if t * t >= 4 * q:
            raise ArithmeticError(f"K value {t} violates |t| < 2*sqrt({q})")
        if t % 4 != 3:
            raise ArithmeticError(f"K value {t} violates t = -1 (mod 4)")
        if count <= 0:
            raise ArithmeticError(f"non-positive multiplicity for {t}")
    return dict(sorted(hist.items()))
