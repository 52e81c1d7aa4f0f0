import pytest

from kloosterman.field import Field
from kloosterman.ksums import kloosterman, range_report
from kloosterman.slgroup import (
    delta_count,
    delta_count_oracle,
    gauss_sum_check,
    group_order,
    sl4_weight_params,
    trace_distribution_closed,
    trace_distribution_from_delta,
    trace_distribution_oracle,
)

# Frozen matrix-sweep counts.
DIST_SL2_Q4 = {0: 16, 1: 20, 2: 12, 3: 12}
DIST_SL2_Q8 = {0: 64, 1: 56, 2: 56, 3: 72, 4: 56, 5: 72, 6: 56, 7: 72}


def test_group_orders():
    assert group_order(2, Field(3)) == 504
    assert group_order(2, Field(4)) == 4080
    assert group_order(4, Field(1)) == 20160
    assert group_order(2, Field(1)) == 6
    with pytest.raises(ValueError):
        group_order(3, Field(2))
    with pytest.raises(ValueError):
        group_order(1, Field(2))


def test_closed_form_known_counts():
    assert trace_distribution_closed(2, Field(2)).counts == DIST_SL2_Q4
    dist = trace_distribution_closed(2, Field(3))
    assert dist.counts == DIST_SL2_Q8
    assert sorted(dist.counts.values()) == [56, 56, 56, 56, 64, 72, 72, 72]
    assert dist.total() == 504
    assert trace_distribution_closed(2, Field(4)).counts[0] == 256


def test_closed_form_matches_sweep():
    for n, r in ((2, 1), (2, 2), (2, 3), (2, 4), (4, 1)):
        field = Field(r)
        assert (
            trace_distribution_closed(n, field).counts
            == trace_distribution_oracle(n, field).counts
        )


def test_sweep_gate():
    with pytest.raises(ValueError):
        trace_distribution_oracle(4, Field(3))  # 8^16 matrices


def test_distribution_structure():
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1), (4, 2), (2, 5)):
        field = Field(r)
        dist = trace_distribution_closed(n, field)
        assert dist.total() == group_order(n, field)
        assert all(c > 0 for c in dist.counts.values())
        acc = 0
        for b, cnt in dist.counts.items():
            if cnt & 1:
                acc ^= b
        assert acc == 0  # the field-weighted sum of the counts vanishes
        assert trace_distribution_from_delta(n, field).counts == dist.counts


def test_delta_counts():
    f8 = Field(3)
    assert delta_count(f8, 1, 0) == 1            # (7+1)/8; only alpha = 1
    for b in f8.units():
        expect = 1 + f8.lam(f8.inv(b))
        assert delta_count(f8, 1, b) == expect
        assert delta_count_oracle(f8, 1, b) == expect
    f4 = Field(2)
    assert delta_count(f4, 3, 0) == 7            # (27+1)/4
    for b in f4.elements():
        assert delta_count(f4, 3, b) == delta_count_oracle(f4, 3, b)
    with pytest.raises(ValueError):
        delta_count(f4, 2, 0)                    # m+1 = 3 not a power of 2


def test_gauss_sum_identity():
    for n, r in ((2, 2), (2, 3), (2, 4), (4, 1)):
        field = Field(r)
        lhs, rhs = gauss_sum_check(n, field)
        assert lhs == rhs
    # nontrivial characters x -> lam(c*x) as well
    f8 = Field(3)
    for c in f8.units():
        lhs, rhs = gauss_sum_check(2, f8, c)
        assert lhs == rhs
    with pytest.raises(ValueError):
        gauss_sum_check(2, f8, 0)


def test_sl4_weight_params_q4():
    f4 = Field(2)
    m0, mt = sl4_weight_params(f4)
    assert set(mt) == {-1, 3}
    q = 4
    assert m0 == q ** 5 * (15 * 63 * 255 + 1)
    for t in (-1, 3):
        assert mt[t] == q ** 6 * (q ** 2 * (q ** 2 - 1) * (q ** 4 - q - 1) + t * t)
    # the binomial bases recover the trace counts and the full group mass
    hist = range_report(f4)
    assert m0 + sum(hist.get(t, 0) * m for t, m in mt.items()) == group_order(4, f4)
    dist = trace_distribution_closed(4, f4)
    assert dist.counts[0] == m0
    for b in f4.units():
        assert dist.counts[b] == mt[kloosterman(f4, 1, f4.inv(b))]


def test_sl4_weight_params_requires_r_ge_2():
    with pytest.raises(ValueError):
        sl4_weight_params(Field(1))


def test_sl4_admissible_t_q16():
    _, mt = sl4_weight_params(Field(4))
    assert set(mt) == {-5, -1, 3, 7}
