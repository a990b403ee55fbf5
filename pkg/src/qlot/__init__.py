"""Single-item capacitated lot sizing with a one-breakpoint all-units discount.

Prices are non-increasing over the horizon and holding costs are linear.
The package provides:

* ``qlot.model``    -- domain types, validation, exact cost evaluation
* ``qlot.oracle``   -- the pseudo-polynomial DP ground truth (dense table)
* ``qlot.bst``      -- augmented AVL tree of segments with lazy tags
* ``qlot.segments`` -- segment algebra (state equations, MV thresholds, merges)
* ``qlot.solver``   -- the O(n log n) per-station segment solver
* ``qlot.harness``  -- seeded generators, differential testing, benchmarks
* ``qlot.cli``      -- command line front end (solve/verify/gen/bench/query)

All quantities and prices are non-negative integers; every comparison the
solver makes is exact (integer or cross-multiplied rational), so solver totals
can be asserted bit-equal against the oracle.
"""

from qlot.model import (
    Instance,
    ValidatedInstance,
    Plan,
    validate_instance,
    price_function,
    plan_cost,
    prefix_demand,
)
from qlot.oracle import solve_naive, dp_value, recover_plan_naive
from qlot.solver import solve, query_dp, recover_plan

__all__ = [
    "Instance",
    "ValidatedInstance",
    "Plan",
    "validate_instance",
    "price_function",
    "plan_cost",
    "prefix_demand",
    "solve_naive",
    "dp_value",
    "recover_plan_naive",
    "solve",
    "query_dp",
    "recover_plan",
]
