"""Weight distribution of the binary trace code attached to SL(n,q).

The code has length N = |SL(n,q)|: a binary word u is a codeword when the
F_q-linear pairing of u with the vector of matrix traces vanishes.  Its
dual consists of the q words c(a) with coordinates tr(a * Tr(g)), so the
number of codewords of weight i is

    C_i = sum over {nu_beta} of prod_beta binom(n_beta, nu_beta),

the sum running over nonnegative nu with sum(nu_beta) = i and
sum(nu_beta * beta) = 0 in F_q.

Three independent algorithms are implemented:

* direct: since char(F_q) = 2, nu_beta * beta depends only on nu_beta mod 2,
  so the constrained sum collapses to a q-slot dynamic program over the XOR
  group of F_q, with even/odd halves of (1+x)^n_beta as step polynomials;
* macwilliams: the binary MacWilliams transform of the q dual weights;
* sl2_form: the direct program with the n = 2 counts {q^2, q^2+q, q^2-q}
  built straight from the trace test, bypassing the character machinery.

A literal composition enumeration is kept as a micro-oracle for tiny cases.
All counts are exact big integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .field import Field
from .ksums import kloosterman_table
from .slgroup import TraceDistribution, group_order, trace_distribution_closed

_COMPOSITION_GATE_Q = 4
_COMPOSITION_GATE_W = 6


@dataclass
class DualWeights:
    """Hamming weights of the q dual codewords, keyed by a (w(c(0)) = 0)."""

    n: int
    field: Field
    weights: dict[int, int]


@dataclass
class WeightDistribution:
    """Codeword counts C_0..C_W; full is true when W reaches the length N."""

    n: int
    field: Field
    W: int
    counts: list[int]
    full: bool


def dual_weights(n: int, field: Field) -> DualWeights:
    """Dual-codeword weights w(c(a)) = (N - q^C(n,2) * K_{n-1}(a)) / 2."""
    N = group_order(n, field)
    scale = field.q ** math.comb(n, 2)
    table = kloosterman_table(field, n - 1)
    weights = {0: 0}
    for a in field.units():
        num = N - scale * table[a]
        w, rem = divmod(num, 2)
        if rem:
            raise ArithmeticError(f"odd weight numerator {num} for a={a}")
        if not 0 < w < N:
            raise ArithmeticError(f"dual weight {w} outside (0, {N}) for a={a}")
        weights[a] = w
    return DualWeights(n=n, field=field, weights=weights)


def dual_weight_by_count(field: Field, dist: TraceDistribution, a: int) -> int:
    """Definitional weight of c(a): coordinates g with tr(a * Tr(g)) = 1."""
    field._check(a)
    return sum(
        cnt for b, cnt in dist.counts.items() if field.trace(field.mul(a, b)) == 1
    )


# ----------------------------------------------------------------------
# direct dynamic program
# ----------------------------------------------------------------------


def _binomial_row(n: int, w: int) -> list[int]:
    """Coefficients of (1+x)^n truncated at degree w."""
    top = min(n, w)
    row = [0] * (top + 1)
    row[0] = 1
    val = 1
    for k in range(1, top + 1):
        val = val * (n - k + 1) // k
        row[k] = val
    return row


def _even_odd_split(n: int, w: int) -> tuple[list[int], list[int]]:
    """Even and odd halves of (1+x)^n, via ((1+x)^n +/- (1-x)^n) / 2."""
    plus = _binomial_row(n, w)
    even = []
    odd = []
    for k, c in enumerate(plus):
        minus = -c if k & 1 else c
        for half, total in ((even, c + minus), (odd, c - minus)):
            part, rem = divmod(total, 2)
            if rem:
                raise ArithmeticError(f"odd split of binom({n},{k}) not exact")
            half.append(part)
    return even, odd


def _poly_mul(p: list[int], q: list[int], w: int) -> list[int]:
    if not p or not q:
        return []
    out = [0] * min(len(p) + len(q) - 1, w + 1)
    top = len(out)
    for i, pi in enumerate(p):
        if pi:
            for j, qj in enumerate(q):
                if i + j >= top:
                    break
                if qj:
                    out[i + j] += pi * qj
    return out


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _xor_dp(field: Field, counts: dict[int, int], w: int,
            order: list[int] | None = None) -> list[int]:
    """Slot-0 weight polynomial of the parity-tracking XOR dynamic program.

    State s holds the generating polynomial of selections whose F_q-sum is s;
    picking an odd number of coordinates at beta XOR-shifts the slot by beta.
    The processing order of the betas does not affect the result.
    """
    q = field.q
    state: list[list[int]] = [[] for _ in range(q)]
    state[0] = [1]
    for beta in order if order is not None else range(q):
        even, odd = _even_odd_split(counts[beta], w)
        if beta == 0:
            full = _poly_add(even, odd)
            state = [_poly_mul(s, full, w) for s in state]
        else:
            state = [
                _poly_add(
                    _poly_mul(state[s], even, w),
                    _poly_mul(state[s ^ beta], odd, w),
                )
                for s in range(q)
            ]
    out = state[0]
    return out + [0] * (w + 1 - len(out))


def weight_distribution_direct(dist: TraceDistribution, w: int) -> WeightDistribution:
    """C_0..C_w from the trace distribution by the XOR dynamic program."""
    N = dist.total()
    if w > N:
        raise ValueError(f"truncation {w} exceeds the code length {N}")
    counts = _xor_dp(dist.field, dist.counts, w)
    return WeightDistribution(
        n=dist.n, field=dist.field, W=w, counts=counts, full=w == N
    )


def weight_distribution_sl2_form(field: Field, w: int) -> WeightDistribution:
    """The n = 2 specialization: counts q^2 and q^2 +/- q read off the trace."""
    q = field.q
    counts = {0: q * q}
    for b in field.units():
        if field.trace(field.inv(b)) == 0:
            counts[b] = q * q + q
        else:
            counts[b] = q * q - q
    N = sum(counts.values())
    if w > N:
        raise ValueError(f"truncation {w} exceeds the code length {N}")
    return WeightDistribution(
        n=2, field=field, W=w, counts=_xor_dp(field, counts, w), full=w == N
    )


# ----------------------------------------------------------------------
# MacWilliams transform
# ----------------------------------------------------------------------


def _dual_word_coeffs(N: int, wt: int, w: int) -> list[int]:
    """Coefficients 0..w of (1+x)^(N-wt) * (1-x)^wt.

    Factored as (1-x^2)^m * (1 +/- x)^d with m = min(wt, N-wt) and
    d = |N - 2*wt|, which keeps the inner convolution short: d is small for
    every dual word (it is q^C(n,2) * |K_{n-1}(a)|), except the zero word
    where m = 0 collapses the sum to a single binomial term.
    """
    u = N - 2 * wt
    m = min(wt, N - wt)
    d = abs(u)
    sign = 1 if u >= 0 else -1
    row_m = _binomial_row(m, w)
    row_d = _binomial_row(d, min(d, w))
    out = [0] * (w + 1)
    for i in range(w + 1):
        lo = max(0, (i - d + 1) // 2)
        hi = min(len(row_m) - 1, i // 2)
        acc = 0
        for j in range(lo, hi + 1):
            k = i - 2 * j
            if k > d:
                continue
            term = row_m[j] * row_d[k]
            if j & 1:
                term = -term
            if sign < 0 and k & 1:
                term = -term
            acc += term
        out[i] = acc
    return out


def weight_distribution_macwilliams(dw: DualWeights, w: int) -> WeightDistribution:
    """C_0..C_w by transforming the dual weight enumerator.

    C_i = (1/q) * sum_a [x^i] (1+x)^(N-w(c(a))) * (1-x)^w(c(a)); the division
    by q must come out exact.  Distinct weights are computed once and scaled
    by multiplicity.
    """
    field = dw.field
    N = group_order(dw.n, field)
    if w > N:
        raise ValueError(f"truncation {w} exceeds the code length {N}")
    mult: dict[int, int] = {}
    for wt in dw.weights.values():
        mult[wt] = mult.get(wt, 0) + 1
    acc = [0] * (w + 1)
    for wt, count in mult.items():
        coeffs = _dual_word_coeffs(N, wt, w)
        for i in range(w + 1):
            acc[i] += count * coeffs[i]
    counts = []
    for i, total in enumerate(acc):
        c, rem = divmod(total, field.q)
        if rem:
            raise ArithmeticError(f"transform sum at degree {i} not divisible by q")
        counts.append(c)
    return WeightDistribution(
        n=dw.n, field=field, W=w, counts=counts, full=w == N
    )


# ----------------------------------------------------------------------
# micro-oracle
# ----------------------------------------------------------------------


def weight_distribution_compositions(dist: TraceDistribution, w: int) -> WeightDistribution:
    """Literal enumeration of the constrained multinomial sum.

    Gated to q <= 4 and w <= 6; exists only to spot-check the dynamic
    program on instances small enough to enumerate.
    """
    field = dist.field
    q = field.q
    if q > _COMPOSITION_GATE_Q or w > _COMPOSITION_GATE_W:
        raise ValueError(
            f"composition enumeration gated to q <= {_COMPOSITION_GATE_Q} "
            f"and W <= {_COMPOSITION_GATE_W}"
        )
    betas = list(field.elements())
    nbs = [dist.counts[b] for b in betas]
    counts = [0] * (w + 1)
    for nus in product(range(w + 1), repeat=q):
        i = sum(nus)
        if i > w:
            continue
        s = 0
        for b, nu in zip(betas, nus):
            if nu & 1:
                s ^= b
        if s:
            continue
        term = 1
        for nb, nu in zip(nbs, nus):
            term *= math.comb(nb, nu)
        counts[i] += term
    return WeightDistribution(
        n=dist.n, field=field, W=w, counts=counts, full=False
    )


def weight_distribution(n: int, field: Field, w: int,
                        algorithm: str = "direct") -> WeightDistribution:
    """Front door: C_0..C_w for the code of SL(n,q) by the named algorithm."""
    if algorithm == "direct":
        return weight_distribution_direct(trace_distribution_closed(n, field), w)
    if algorithm == "macwilliams":
        return weight_distribution_macwilliams(dual_weights(n, field), w)
    if algorithm == "both":
        direct = weight_distribution(n, field, w, "direct")
        mac = weight_distribution(n, field, w, "macwilliams")
        if direct.counts != mac.counts:
            raise ArithmeticError("direct and MacWilliams paths disagree")
        return direct
    raise ValueError(f"unknown algorithm {algorithm!r}")
