"""Exact Kloosterman sums over GF(2^r), SL(n,q) trace codes, power moments."""

from .field import DEFAULT_POLYS, Field, is_irreducible
from .ksums import (
    brute_moment,
    k2_via_square,
    kloosterman,
    kloosterman_direct,
    kloosterman_table,
    range_report,
    value_histogram,
)
from .moments import (
    SalieCounts,
    moisio_closed_form,
    moisio_moments,
    pless_lhs_check,
    recursive_moments,
    salie_counts,
    salie_moments,
    stirling2,
    u_power_sum,
)
from .slgroup import (
    TraceDistribution,
    delta_count,
    delta_count_oracle,
    gauss_sum_check,
    group_order,
    sl4_weight_params,
    trace_distribution_closed,
    trace_distribution_from_delta,
    trace_distribution_oracle,
)
from .verify import CheckResult, run_all_checks
from .weights import (
    DualWeights,
    WeightDistribution,
    dual_weight_by_count,
    dual_weights,
    weight_distribution,
    weight_distribution_compositions,
    weight_distribution_direct,
    weight_distribution_macwilliams,
    weight_distribution_sl2_form,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_POLYS",
    "Field",
    "is_irreducible",
    "kloosterman",
    "kloosterman_table",
    "kloosterman_direct",
    "k2_via_square",
    "brute_moment",
    "value_histogram",
    "range_report",
    "TraceDistribution",
    "group_order",
    "trace_distribution_closed",
    "trace_distribution_oracle",
    "trace_distribution_from_delta",
    "delta_count",
    "delta_count_oracle",
    "gauss_sum_check",
    "sl4_weight_params",
    "DualWeights",
    "WeightDistribution",
    "dual_weights",
    "dual_weight_by_count",
    "weight_distribution",
    "weight_distribution_direct",
    "weight_distribution_macwilliams",
    "weight_distribution_sl2_form",
    "weight_distribution_compositions",
    "stirling2",
    "recursive_moments",
    "pless_lhs_check",
    "SalieCounts",
    "salie_counts",
    "salie_moments",
    "moisio_closed_form",
    "moisio_moments",
    "u_power_sum",
    "CheckResult",
    "run_all_checks",
    "__version__",
]
