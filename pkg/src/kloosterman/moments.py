"""Power moments of Kloosterman sums: recursion, identities, closed forms.

MK_m^h denotes the sum of K_m(a)^h over nonzero a.  The central tool is an
exact recursion expressing q^(C(n,2)*h) * MK_{n-1}^h through all lower
moments and the weight counts C_0..C_h of the SL(n,q) trace code; every
division it performs must come out exact, which doubles as a structural
self-check.  Alongside it:

* a direct check of the power-moment identity for the dual code, with both
  sides computed from first principles;
* the tuple-counting route: M_h counts unit tuples whose sum and inverse-sum
  are both 1, computed by a pair-state dynamic program, and then
  MK^h = q^2 * M_{h-1} - (q-1)^(h-1) + 2*(-1)^(h-1);
* closed forms for MK^h, h <= 10, whose irrational ingredients u_1..u_4 are
  power sums of algebraic conjugates, evaluated exactly through linear
  recurrences from their minimal polynomials.

Everything returns plain signed big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .field import Field
from .ksums import brute_moment
from .slgroup import group_order, trace_distribution_closed
from .weights import (
    WeightDistribution,
    dual_weight_by_count,
    weight_distribution_direct,
)


def stirling2(h: int, t: int) -> int:
    """Stirling number of the second kind S(h,t), zero when t > h.

    Evaluated as (1/t!) * sum_j (-1)^(t-j) * binom(t,j) * j^h; the division
    by t! is exact.
    """
    if h < 0 or t < 0:
        raise ValueError("arguments must be nonnegative")
    if t > h:
        return 0
    total = 0
    for j in range(t + 1):
        term = math.comb(t, j) * j ** h
        total += -term if (t - j) & 1 else term
    s, rem = divmod(total, math.factorial(t))
    if rem:
        raise ArithmeticError(f"S({h},{t}) division by {t}! not exact")
    return s


def default_truncation(n: int, field: Field, h_max: int) -> int:
    """Weight truncation the recursion needs: max(h_max, 32), capped at N."""
    return min(group_order(n, field), max(h_max, 32))


def _comb0(b: int, a: int) -> int:
    """binom(b, a) under the convention that out-of-range indices give 0."""
    if a < 0 or a > b:
        return 0
    return math.comb(b, a)


def recursive_moments(n: int, field: Field, weights: WeightDistribution,
                      h_max: int) -> list[int]:
    """MK_{n-1}^0 .. MK_{n-1}^h_max by the weight-count recursion.

    The order-h step divides by q^(C(n,2)*h); inexactness there would mean a
    corrupted weight table, so it is checked, not assumed.
    """
    if weights.n != n or weights.field != field:
        raise ValueError("weight distribution was computed for different parameters")
    q = field.q
    N = group_order(n, field)
    if weights.W < min(N, h_max):
        raise ValueError(
            f"need weights up to {min(N, h_max)}, have only {weights.W}"
        )
    b = math.comb(n, 2)
    qb = q ** b
    mk = [q - 1]
    for h in range(1, h_max + 1):
        first = 0
        for i in range(h):
            term = math.comb(h, i) * N ** (h - i) * qb ** i * mk[i]
            first += -term if (h + i) & 1 else term
        first = -first
        second = 0
        for i in range(min(N, h) + 1):
            ci = weights.counts[i]
            if not ci:
                continue
            inner = 0
            for t in range(i, h + 1):
                inner += (
                    math.factorial(t)
                    * stirling2(h, t)
                    * 2 ** (h - t)
                    * _comb0(N - i, N - t)
                )
            second += -ci * inner if (h + i) & 1 else ci * inner
        total = first + q * second
        value, rem = divmod(total, qb ** h)
        if rem:
            raise ArithmeticError(f"moment recursion not divisible by q^{b * h} at h={h}")
        mk.append(value)
    return mk


def pless_lhs_check(n: int, field: Field, h_max: int) -> list[tuple[int, int, int]]:
    """Both sides of the dual power-moment identity for h = 0..h_max.

    Left side: sum over the q dual codewords of weight^h (0^0 = 1), with the
    weights obtained by definitional coordinate counting.  Right side: the
    binomial/Stirling expression in C_0..C_h with the dual dimension r.
    Returns (h, lhs, rhs) triples; the caller asserts equality.
    """
    q = field.q
    N = group_order(n, field)
    dist = trace_distribution_closed(n, field)
    dws = [dual_weight_by_count(field, dist, a) for a in field.elements()]
    wd = weight_distribution_direct(dist, min(N, h_max))
    out = []
    for h in range(h_max + 1):
        if h == 0:
            lhs = len(dws)
        else:
            lhs = sum(w ** h for w in dws)
        rhs = Fraction(0)
        for i in range(min(N, h) + 1):
            ci = wd.counts[i]
            if not ci:
                continue
            inner = Fraction(0)
            for t in range(i, h + 1):
                inner += Fraction(
                    math.factorial(t) * stirling2(h, t) * _comb0(N - i, N - t),
                    2 ** t,
                )
            rhs += (-1) ** i * ci * inner
        rhs *= q
        if rhs.denominator != 1:
            raise ArithmeticError(f"identity right side not integral at h={h}")
        out.append((h, lhs, int(rhs)))
    return out


# ----------------------------------------------------------------------
# tuple-counting route
# ----------------------------------------------------------------------


@dataclass
class SalieCounts:
    """A_h / M_h tuple counts: sum and inverse-sum both 0, resp. both 1."""

    field: Field
    A: list[int]
    M: list[int]


def salie_counts(field: Field, h_max: int) -> SalieCounts:
    """Count unit h-tuples by a dynamic program over (sum, inverse-sum) pairs.

    One table pass per tuple slot, O(h_max * q^3) overall.  On the way out
    this checks the relation (q-1) * M_{h-1} = A_h and replays the counts
    through MK^h = q^2 * M_{h-1} - (q-1)^(h-1) + 2*(-1)^(h-1) against the
    brute-force moments, so a returned table is already cross-verified.
    """
    q = field.q
    inv = field.inv_table()
    state = [[0] * q for _ in range(q)]
    state[0][0] = 1
    a_list = [1]
    m_list = [0]
    for _ in range(h_max):
        new = [[0] * q for _ in range(q)]
        for s in range(q):
            row = state[s]
            for si in range(q):
                v = row[si]
                if v:
                    for x in range(1, q):
                        new[s ^ x][si ^ inv[x]] += v
        state = new
        a_list.append(state[0][0])
        m_list.append(state[1][1])
    for h in range(1, h_max + 1):
        if (q - 1) * m_list[h - 1] != a_list[h]:
            raise ArithmeticError(f"(q-1)*M_{h - 1} != A_{h}")
    for h in range(1, h_max + 1):
        sign = 1 if (h - 1) % 2 == 0 else -1
        via_counts = q * q * m_list[h - 1] - (q - 1) ** (h - 1) + 2 * sign
        if via_counts != brute_moment(field, 1, h):
            raise ArithmeticError(f"tuple-count moment disagrees with brute force at h={h}")
    return SalieCounts(field=field, A=a_list, M=m_list)


def salie_moments(field: Field, h_max: int) -> list[int]:
    """MK^0..MK^h_max through MK^h = q^2 * M_{h-1} - (q-1)^(h-1) + 2*(-1)^(h-1)."""
    q = field.q
    counts = salie_counts(field, max(h_max - 1, 0))
    out = [q - 1]
    for h in range(1, h_max + 1):
        sign = 1 if (h - 1) % 2 == 0 else -1
        out.append(q * q * counts.M[h - 1] - (q - 1) ** (h - 1) + 2 * sign)
    return out


# ----------------------------------------------------------------------
# closed forms for h <= 10
# ----------------------------------------------------------------------

# Minimal polynomials of the conjugate families behind u_1..u_4, committed
# as exact monic coefficient lists [c_1, .., c_k] for x^k + c_1 x^(k-1) + ...
# + c_k.  Derivation: each u_j is the r-th power sum of the roots listed in
# its docstring below; sums and products of those roots reduce to rationals
# (pairwise products are 1, resp. 2048 for u_4), giving:
#   u_1: roots (1 +/- sqrt(-15))/4          -> x^2 - (1/2) x + 1
#   u_2: roots (-5 +/- sqrt(-39))/8         -> x^2 + (5/4) x + 1
#   u_3: roots (-3 +/- sqrt(505) +/- sqrt(-510 -/+ 6*sqrt(505)))/32
#        (all four)                         -> x^4 + (3/8) x^3 + (1/16) x^2
#                                              + (3/8) x + 1
#   u_4: roots -12 +/- 4*sqrt(-119)         -> x^2 + 24 x + 2048
_U_MIN_POLY: dict[int, list[Fraction]] = {
    1: [Fraction(-1, 2), Fraction(1)],
    2: [Fraction(5, 4), Fraction(1)],
    3: [Fraction(3, 8), Fraction(1, 16), Fraction(3, 8), Fraction(1)],
    4: [Fraction(24), Fraction(2048)],
}


def u_power_sum(which: int, r: int) -> Fraction:
    """Exact r-th power sum u_which(r) of the committed conjugate family.

    Newton's identities seed p_1..p_k from the minimal polynomial; beyond
    that each root satisfies the polynomial, so the power sums obey the
    corresponding linear recurrence.
    """
    if which not in _U_MIN_POLY:
        raise ValueError(f"no such u-sequence: {which}")
    if r < 0:
        raise ValueError("power sums defined for nonnegative r only")
    c = _U_MIN_POLY[which]
    k = len(c)
    p: list[Fraction] = [Fraction(k)]
    for m in range(1, r + 1):
        if m <= k:
            val = -m * c[m - 1]
            for i in range(1, m):
                val -= c[i - 1] * p[m - i]
        else:
            val = Fraction(0)
            for i in range(1, k + 1):
                val -= c[i - 1] * p[m - i]
        p.append(val)
    return p[r]


def moisio_closed_form(field: Field, h: int) -> int:
    """Closed-form MK^h for 1 <= h <= 10 over GF(2^r)."""
    if not 1 <= h <= 10:
        raise ValueError(f"closed forms cover 1 <= h <= 10, got {h}")
    q = field.q
    s = -1 if field.r & 1 else 1
    if h == 1:
        return 1
    if h == 2:
        return q ** 2 - q - 1
    if h == 3:
        return s * q ** 2 + 2 * q + 1
    if h == 4:
        return 2 * q ** 3 - 2 * q ** 2 - 3 * q - 1
    u1 = u_power_sum(1, field.r)
    if h == 5:
        val = (u1 + 4 * s) * q ** 3 + 5 * q ** 2 + 4 * q + 1
    elif h == 6:
        val = Fraction(5 * q ** 4 - (5 + s) * q ** 3 - 9 * q ** 2 - 5 * q - 1)
    elif h == 7:
        u2 = u_power_sum(2, field.r)
        val = (u2 + 6 * u1 + 14 * s + 1) * q ** 4 + 14 * q ** 3 + 14 * q ** 2 + 6 * q + 1
    elif h == 8:
        val = Fraction(
            14 * q ** 5 - (15 + 7 * s) * q ** 4 - 28 * q ** 3 - 20 * q ** 2 - 7 * q - 1
        )
    elif h == 9:
        u2 = u_power_sum(2, field.r)
        u3 = u_power_sum(3, field.r)
        val = (
            (u3 + 8 * u2 + 27 * u1 + 8 + 48 * s) * q ** 5
            + 42 * q ** 4 + 48 * q ** 3 + 27 * q ** 2 + 8 * q + 1
        )
    else:
        u4 = u_power_sum(4, field.r)
        val = (
            42 * q ** 6 - (51 + 35 * s) * q ** 5 - 90 * q ** 4 - 75 * q ** 3
            - 35 * q ** 2 - 9 * q - 1 - u4
        )
    val = Fraction(val)
    if val.denominator != 1:
        raise ArithmeticError(f"closed form for h={h} not integral: {val}")
    return int(val)


def moisio_moments(field: Field, h_max: int) -> list[int]:
    """MK^0..MK^min(h_max,10) from the closed forms (MK^0 = q - 1)."""
    top = min(h_max, 10)
    return [field.q - 1] + [moisio_closed_form(field, h) for h in range(1, top + 1)]
