"""The SL(n,q) side: group order, trace distribution, and related counts.

n is restricted to powers of two (as is q = 2^r), which makes a -> a^n a
bijection of the unit group and keeps every closed form below valid.  The
trace distribution n_beta = #{g in SL(n,q) : Tr(g) = beta} has the closed
form

    n_beta = q^(C(n,2)-1) * (prod_{j=2..n}(q^j - 1) + 1 + q * theta(beta))

with theta(0) = 0 and theta(beta) = K_{n-2}(beta^-1) otherwise (K_0 = lam).
A full matrix-enumeration oracle is provided for tiny instances, plus the
older delta-count form of the same quantity, so the two printed shapes of
the formula can be checked against each other and against enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .field import Field
from .ksums import kloosterman, kloosterman_table

# Total number of matrices the enumeration oracle is willing to sweep.
ENUM_GATE = 1 << 26
DELTA_GATE = 1 << 24


def _require_power_of_two(n: int) -> None:
    if n < 2 or n & (n - 1):
        raise ValueError(f"n must be a power of 2 and at least 2, got {n}")


@dataclass
class TraceDistribution:
    """Counts of group elements by matrix trace: beta -> n_beta."""

    n: int
    field: Field
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def group_order(n: int, field: Field) -> int:
    """Order of SL(n,q): q^C(n,2) * prod_{j=2..n} (q^j - 1)."""
    _require_power_of_two(n)
    q = field.q
    order = q ** math.comb(n, 2)
    for j in range(2, n + 1):
        order *= q ** j - 1
    return order


def trace_distribution_closed(n: int, field: Field) -> TraceDistribution:
    """Exact n_beta for every beta, from the closed form."""
    _require_power_of_two(n)
    q = field.q
    base = math.prod(q ** j - 1 for j in range(2, n + 1)) + 1
    scale = q ** (math.comb(n, 2) - 1)
    theta = kloosterman_table(field, n - 2)  # n = 2 lands on the K_0 = lam convention
    counts = {0: scale * base}
    for b in field.units():
        counts[b] = scale * (base + q * theta[field.inv(b)])
    return TraceDistribution(n=n, field=field, counts=counts)


def _det(field: Field, rows: list[list[int]]) -> int:
    """Determinant by Gaussian elimination; char 2, so swaps cost nothing."""
    n = len(rows)
    mul = field.mul
    inv = field.inv
    det = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
        pivot = rows[c][c]
        det = mul(det, pivot)
        pinv = inv(pivot)
        for i in range(c + 1, n):
            if rows[i][c]:
                f = mul(rows[i][c], pinv)
                top = rows[c]
                rows[i] = [rows[i][j] ^ mul(f, top[j]) for j in range(n)]
    return det


def trace_distribution_oracle(n: int, field: Field) -> TraceDistribution:
    """n_beta by sweeping all q^(n^2) matrices and filtering det = 1."""
    _require_power_of_two(n)
    q = field.q
    total = q ** (n * n)
    if total > ENUM_GATE:
        raise ValueError(f"enumeration gated at {ENUM_GATE} matrices, need {total}")
    counts = {b: 0 for b in field.elements()}
    if n == 2:
        # 2x2 cofactor expansion, worth special-casing for the sweep size
        mul = field.mul
        for a in field.elements():
            for d in field.elements():
                ad = mul(a, d)
                t = a ^ d
                for b in field.elements():
                    for c in field.elements():
                        if ad ^ mul(b, c) == 1:
                            counts[t] += 1
        return TraceDistribution(n=n, field=field, counts=counts)
    for flat in product(field.elements(), repeat=n * n):
        rows = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if _det(field, rows) == 1:
            t = 0
            for i in range(n):
                t ^= flat[i * n + i]
            counts[t] += 1
    return TraceDistribution(n=n, field=field, counts=counts)


def delta_count(field: Field, m: int, beta: int) -> int:
    """Closed-form count of m-tuples of units with sum + inverse-product = beta.

    m must be n-1 for n a power of 2; then (q-1)^m + 1 is divisible by q and

        delta(m, q; 0)    = ((q-1)^m + 1) / q
        delta(m, q; beta) = K_{m-1}(beta^-1) + ((q-1)^m + 1) / q.
    """
    _require_power_of_two(m + 1)
    field._check(beta)
    q = field.q
    base, rem = divmod((q - 1) ** m + 1, q)
    if rem:
        raise ArithmeticError(f"(q-1)^{m} + 1 not divisible by q={q}")
    if beta == 0:
        return base
    return kloosterman(field, m - 1, field.inv(beta)) + base


def delta_count_oracle(field: Field, m: int, beta: int) -> int:
    """delta(m, q; beta) by literal enumeration over (q-1)^m tuples."""
    field._check(beta)
    work = (field.q - 1) ** m
    if work > DELTA_GATE:
        raise ValueError(f"enumeration gated at {DELTA_GATE} tuples, need {work}")
    inv = field.inv_table()
    mul = field.mul
    count = 0
    for tup in product(field.units(), repeat=m):
        s = 0
        p = 1
        for x in tup:
            s ^= x
            p = mul(p, x)
        if s ^ inv[p] == beta:
            count += 1
    return count


def trace_distribution_from_delta(n: int, field: Field) -> TraceDistribution:
    """n_beta in its delta-count shape, as an independent rewrite check.

    n_beta = q^(C(n,2)-1) * (prod_{j=2..n}(q^j-1) - (q-1)^(n-1)
             + q * delta(n-1, q; beta)).
    """
    _require_power_of_two(n)
    q = field.q
    scale = q ** (math.comb(n, 2) - 1)
    core = math.prod(q ** j - 1 for j in range(2, n + 1)) - (q - 1) ** (n - 1)
    counts = {
        b: scale * (core + q * delta_count(field, n - 1, b))
        for b in field.elements()
    }
    return TraceDistribution(n=n, field=field, counts=counts)


def gauss_sum_check(n: int, field: Field, c: int = 1) -> tuple[int, int]:
    """Both sides of the group character-sum identity, computed independently.

    Left: sum over beta of n_beta * lam(c * beta), with n_beta from the
    matrix-enumeration oracle.  Right: q^C(n,2) * K_{n-1}(c).  The two are
    returned as a pair; they must be equal.
    """
    if c == 0:
        raise ValueError("the character must be nontrivial (c != 0)")
    dist = trace_distribution_oracle(n, field)
    lhs = sum(cnt * field.lam(field.mul(c, b)) for b, cnt in dist.counts.items())
    rhs = field.q ** math.comb(n, 2) * kloosterman(field, n - 1, c)
    return lhs, rhs


def sl4_weight_params(field: Field) -> tuple[int, dict[int, int]]:
    """Binomial bases (m_0, {t: m_t}) for the n = 4 weight-count formula.

    m_0 counts trace-zero elements; m_t counts elements whose trace beta has
    K_1(beta^-1) = t, for each admissible t with |t| < 2*sqrt(q) and
    t = -1 (mod 4).  Requires r >= 2.
    """
    if field.r < 2:
        raise ValueError("the n = 4 parameterization applies only for r >= 2")
    q = field.q
    m0 = q ** 5 * (math.prod(q ** j - 1 for j in range(2, 5)) + 1)
    core = q ** 2 * (q ** 2 - 1) * (q ** 4 - q - 1)
    bound = math.isqrt(4 * q - 1)
    mt = {
        t: q ** 6 * (core + t * t)
        for t in range(-bound, bound + 1)
        if t % 4 == 3
    }
    return m0, mt
