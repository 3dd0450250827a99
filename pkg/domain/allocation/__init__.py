"""
多资源公平分配子领域

DRF（逐步模拟）、EDRF（可分割、按轮）、PDRF（闭式预计算）三种分配器，
以及 DRF 主循环的周期分析。
"""

from .allocators import ALLOCATOR_NAMES, Allocator, get_allocator
from .cycles import (
    CycleDecomposition,
    CycleLayer,
    CycleProfile,
    SubcyclePattern,
    cycle_profile,
    decompose_higher_order,
    rational_lcm,
    subcycle_schedule,
)
from .drf import (
    DrfOptions,
    DrfTrace,
    HaltReason,
    TraceStep,
    drf_allocate,
    predicted_iterations,
    selection_cost,
)
from .edrf import (
    DivisibleAllocation,
    NormalizedDemand,
    RoundOutcome,
    RoundRecord,
    edrf_allocate,
    edrf_round,
    normalize,
)
from .pdrf import (
    PdrfResult,
    finishing_pass,
    float_mismatches,
    pdrf_allocate,
    pdrf_k,
    pdrf_k_float,
    pdrf_k_simplified,
    pdrf_tasks_float,
)
from .shares import (
    DominantShare,
    dominant_share,
    ensure_valid,
    fractional_demands,
    normalize_weights,
    per_task_shares,
    user_dominant_share,
    validate_scenario,
)
from .value_objects import (
    Allocation,
    DemandVector,
    Rational,
    ResourceVector,
    Scenario,
    UserDemand,
    UserId,
    WeightVector,
)

__all__ = [
    # 值对象
    "Allocation",
    "DemandVector",
    "Rational",
    "ResourceVector",
    "Scenario",
    "UserDemand",
    "UserId",
    "WeightVector",
    # 份额
    "DominantShare",
    "dominant_share",
    "ensure_valid",
    "fractional_demands",
    "normalize_weights",
    "per_task_shares",
    "user_dominant_share",
    "validate_scenario",
    # DRF
    "DrfOptions",
    "DrfTrace",
    "HaltReason",
    "TraceStep",
    "drf_allocate",
    "predicted_iterations",
    "selection_cost",
    # EDRF
    "DivisibleAllocation",
    "NormalizedDemand",
    "RoundOutcome",
    "RoundRecord",
    "edrf_allocate",
    "edrf_round",
    "normalize",
    # 周期
    "CycleDecomposition",
    "CycleLayer",
    "CycleProfile",
    "SubcyclePattern",
    "cycle_profile",
    "decompose_higher_order",
    "rational_lcm",
    "subcycle_schedule",
    # PDRF
    "PdrfResult",
    "finishing_pass",
    "float_mismatches",
    "pdrf_allocate",
    "pdrf_k",
    "pdrf_k_float",
    "pdrf_k_simplified",
    "pdrf_tasks_float",
    # 具名分配器
    "ALLOCATOR_NAMES",
    "Allocator",
    "get_allocator",
]
