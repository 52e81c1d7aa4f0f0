"""Cross-verification suite: every identity the library rests on, end to end.

Each check compares two independently computed exact quantities (closed form
vs enumeration, recursion vs definition, three weight algorithms against
each other, computed tables against the built-in reference data).  A check
never loosens a comparison: everything is integer equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .field import Field
from .ksums import (
    brute_moment,
    k2_via_square,
    kloosterman,
    kloosterman_direct,
    kloosterman_table,
    range_report,
)
from .moments import (
    default_truncation,
    moisio_moments,
    pless_lhs_check,
    recursive_moments,
    salie_moments,
)
from .slgroup import (
    gauss_sum_check,
    group_order,
    sl4_weight_params,
    trace_distribution_closed,
    trace_distribution_from_delta,
    trace_distribution_oracle,
)
from .tables import TABLE_I, TABLE_II, TABLE_III, TABLE_IV
from .weights import (
    dual_weight_by_count,
    dual_weights,
    weight_distribution_direct,
    weight_distribution_macwilliams,
    weight_distribution_sl2_form,
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, ok=bool(ok), detail=detail)


def _moments_for(n: int, r: int, h_max: int, poly: int | None = None) -> list[int]:
    field = Field(r, poly)
    w = default_truncation(n, field, h_max)
    wd = weight_distribution_direct(trace_distribution_closed(n, field), w)
    return recursive_moments(n, field, wd, h_max)


def check_table_i() -> CheckResult:
    field = Field(3)
    wd = weight_distribution_direct(trace_distribution_closed(2, field), 21)
    ok = tuple(wd.counts) == TABLE_I
    return _result("table_I_weights_sl2_q8", ok, f"{len(wd.counts)} rows compared")


def check_table_ii() -> CheckResult:
    mk = _moments_for(2, 3, 29)
    ok = tuple(mk) == TABLE_II
    return _result("table_II_moments_q8", ok, f"{len(mk)} rows compared")


def check_table_iii() -> CheckResult:
    field = Field(4)
    wd = weight_distribution_direct(trace_distribution_closed(2, field), 11)
    ok = tuple(wd.counts) == TABLE_III
    return _result("table_III_weights_sl2_q16", ok, f"{len(wd.counts)} rows compared")


def check_table_iv() -> CheckResult:
    mk = _moments_for(2, 4, 11)
    ok = tuple(mk) == TABLE_IV
    return _result("table_IV_moments_q16", ok, f"{len(mk)} rows compared")


def check_recursion_vs_brute_dim1() -> CheckResult:
    bad = []
    for r in (1, 2, 3, 4):
        field = Field(r)
        rec = _moments_for(2, r, 12)
        brute = [brute_moment(field, 1, h) for h in range(13)]
        if rec != brute:
            bad.append(f"q={field.q}")
    return _result(
        "recursion_vs_definition_dim1",
        not bad,
        "q in {2,4,8,16}, h <= 12" + (f"; FAILED {bad}" if bad else ""),
    )


def check_recursion_vs_brute_dim3() -> CheckResult:
    field = Field(1)
    rec = _moments_for(4, 1, 8)
    brute = [brute_moment(field, 3, h) for h in range(9)]
    return _result(
        "recursion_vs_definition_dim3",
        rec == brute,
        "(n,q) = (4,2), h <= 8",
    )


def check_weight_algorithms_agree() -> CheckResult:
    bad = []
    for r in (2, 3):
        field = Field(r)
        n_len = group_order(2, field)
        direct = weight_distribution_direct(trace_distribution_closed(2, field), n_len)
        mac = weight_distribution_macwilliams(dual_weights(2, field), n_len)
        sl2 = weight_distribution_sl2_form(field, n_len)
        if not (direct.counts == mac.counts == sl2.counts):
            bad.append(f"q={field.q} full")
    field = Field(4)
    direct = weight_distribution_direct(trace_distribution_closed(2, field), 32)
    mac = weight_distribution_macwilliams(dual_weights(2, field), 32)
    sl2 = weight_distribution_sl2_form(field, 32)
    if not (direct.counts == mac.counts == sl2.counts):
        bad.append("q=16 W=32")
    return _result(
        "weight_algorithms_agree",
        not bad,
        "full for q in {4,8}; W=32 for q=16" + (f"; FAILED {bad}" if bad else ""),
    )


def check_full_distribution_invariants() -> CheckResult:
    bad = []
    for r in (2, 3, 4):
        field = Field(r)
        n_len = group_order(2, field)
        dist = trace_distribution_closed(2, field)
        if r == 4:
            wd = weight_distribution_macwilliams(dual_weights(2, field), n_len)
        else:
            wd = weight_distribution_direct(dist, n_len)
        counts = wd.counts
        if counts[0] != 1:
            bad.append(f"q={field.q}: C_0 != 1")
        if counts[1] != dist.counts[0]:
            bad.append(f"q={field.q}: C_1 != n_0")
        if any(counts[i] != counts[n_len - i] for i in range(n_len + 1)):
            bad.append(f"q={field.q}: symmetry broken")
        if sum(counts) != 1 << (n_len - field.r):
            bad.append(f"q={field.q}: total != 2^(N-r)")
    return _result(
        "full_distribution_invariants",
        not bad,
        "q in {4,8,16}" + (f"; FAILED {bad}" if bad else ""),
    )


def check_trace_distribution_oracle() -> CheckResult:
    bad = []
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1)):
        field = Field(r)
        closed = trace_distribution_closed(n, field)
        swept = trace_distribution_oracle(n, field)
        if closed.counts != swept.counts:
            bad.append(f"SL({n},{field.q})")
        if closed.total() != group_order(n, field):
            bad.append(f"SL({n},{field.q}) total")
    return _result(
        "trace_distribution_closed_vs_enumeration",
        not bad,
        "SL(2,4), SL(2,8), SL(2,16), SL(4,2)" + (f"; FAILED {bad}" if bad else ""),
    )


def check_gauss_sums() -> CheckResult:
    bad = []
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1)):
        lhs, rhs = gauss_sum_check(n, Field(r))
        if lhs != rhs:
            bad.append(f"SL({n},{1 << r}): {lhs} != {rhs}")
    return _result(
        "gauss_sum_identity",
        not bad,
        "four enumerable groups" + (f"; FAILED {bad}" if bad else ""),
    )


def check_section_iv_identities() -> CheckResult:
    bad = []
    for r in (2, 3, 4):
        field = Field(r)
        rec = _moments_for(2, r, 12)
        if salie_moments(field, 12) != rec:
            bad.append(f"q={field.q} tuple-count route")
        if moisio_moments(field, 10) != rec[:11]:
            bad.append(f"q={field.q} closed forms")
    return _result(
        "moment_identities_agree",
        not bad,
        "tuple-count DP (h<=12) and closed forms (h<=10), q in {4,8,16}"
        + (f"; FAILED {bad}" if bad else ""),
    )


def check_square_identity_and_range() -> CheckResult:
    bad = []
    for r in (2, 3, 4):
        field = Field(r)
        k2 = kloosterman_table(field, 2)
        for a in field.units():
            if k2_via_square(field, a) != k2[a]:
                bad.append(f"q={field.q} a={a}")
        try:
            range_report(field)
        except ArithmeticError as exc:
            bad.append(f"q={field.q}: {exc}")
    return _result(
        "square_identity_and_value_range",
        not bad,
        "q in {4,8,16}, every a" + (f"; FAILED {bad}" if bad else ""),
    )


def check_poly_independence() -> CheckResult:
    polys = (0b10011, 0b11001)
    weight_runs = []
    moment_runs = []
    for poly in polys:
        field = Field(4, poly)
        wd = weight_distribution_direct(trace_distribution_closed(2, field), 11)
        weight_runs.append(wd.counts)
        moment_runs.append(_moments_for(2, 4, 11, poly))
    ok = weight_runs[0] == weight_runs[1] and moment_runs[0] == moment_runs[1]
    ok = ok and tuple(weight_runs[0]) == TABLE_III and tuple(moment_runs[0]) == TABLE_IV
    return _result(
        "reduction_polynomial_independence",
        ok,
        "r=4 under 0b10011 and 0b11001",
    )


def check_pless_identity() -> CheckResult:
    bad = []
    for n, r, h_max in ((2, 2, 8), (2, 3, 8), (4, 1, 6)):
        for h, lhs, rhs in pless_lhs_check(n, Field(r), h_max):
            if lhs != rhs:
                bad.append(f"SL({n},{1 << r}) h={h}")
    return _result(
        "dual_power_moment_identity",
        not bad,
        "direct both-sides check" + (f"; FAILED {bad}" if bad else ""),
    )


def check_dual_weight_consistency() -> CheckResult:
    bad = []
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1)):
        field = Field(r)
        dist = trace_distribution_closed(n, field)
        dw = dual_weights(n, field)
        for a in field.elements():
            if dw.weights[a] != dual_weight_by_count(field, dist, a):
                bad.append(f"SL({n},{field.q}) a={a}")
    return _result(
        "dual_weights_formula_vs_count",
        not bad,
        "character formula vs coordinate count" + (f"; FAILED {bad}" if bad else ""),
    )


def check_structural_counts() -> CheckResult:
    bad = []
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1), (4, 2)):
        field = Field(r)
        dist = trace_distribution_closed(n, field)
        if dist.total() != group_order(n, field):
            bad.append(f"SL({n},{field.q}) mass")
        acc = 0
        for b, cnt in dist.counts.items():
            if cnt <= 0:
                bad.append(f"SL({n},{field.q}) n_{b} <= 0")
            if cnt & 1:
                acc ^= b
        if acc != 0:
            bad.append(f"SL({n},{field.q}) weighted sum != 0")
        if trace_distribution_from_delta(n, field).counts != dist.counts:
            bad.append(f"SL({n},{field.q}) delta form mismatch")
    field = Field(2)
    m0, mt = sl4_weight_params(field)
    hist = range_report(field)
    mass = m0 + sum(hist.get(t, 0) * m for t, m in mt.items())
    if mass != group_order(4, field):
        bad.append("n=4 q=4 binomial-base mass")
    dist4 = trace_distribution_closed(4, field)
    for b in field.units():
        t = kloosterman(field, 1, field.inv(b))
        if dist4.counts[b] != mt[t]:
            bad.append(f"n=4 q=4 beta={b} m_t mismatch")
    return _result(
        "trace_distribution_structure",
        not bad,
        "mass, positivity, weighted sum, delta form, n=4 parameters"
        + (f"; FAILED {bad}" if bad else ""),
    )


def check_oracle_equivalence_ksums() -> CheckResult:
    bad = []
    for r in (2, 3):
        field = Field(r)
        for m in (2, 3):
            table = kloosterman_table(field, m)
            for a in field.units():
                if table[a] != kloosterman_direct(field, m, a):
                    bad.append(f"q={field.q} m={m} a={a}")
    return _result(
        "ksum_recursion_vs_enumeration",
        not bad,
        "m in {2,3}, q in {4,8}, every a" + (f"; FAILED {bad}" if bad else ""),
    )


ALL_CHECKS: list[Callable[[], CheckResult]] = [
    check_table_i,
    check_table_ii,
    check_table_iii,
    check_table_iv,
    check_recursion_vs_brute_dim1,
    check_recursion_vs_brute_dim3,
    check_weight_algorithms_agree,
    check_full_distribution_invariants,
    check_trace_distribution_oracle,
    check_gauss_sums,
    check_section_iv_identities,
    check_square_identity_and_range,
    check_poly_independence,
    check_pless_identity,
    check_dual_weight_consistency,
    check_structural_counts,
    check_oracle_equivalence_ksums,
]


def run_all_checks() -> list[CheckResult]:
    """Run every check; a check that raises is reported as failed."""
    results = []
    for fn in ALL_CHECKS:
        try:
            results.append(fn())
        except Exception as exc:  # surface, never hide, a broken invariant
            results.append(_result(fn.__name__, False, f"raised {exc!r}"))
    return results
