"""
结果编码

把领域结果转成可直接 json.dumps 的字典。精确分数写作 "p/q"，整数写作 "p"；
每个顶层文档都带 schema_version。
"""

import json
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional

from domain.allocation import (
    Allocation,
    CycleDecomposition,
    CycleProfile,
    DivisibleAllocation,
    DrfTrace,
    PdrfResult,
    Scenario,
    SubcyclePattern,
    UserId,
    per_task_shares,
)
from infrastructure.config import get_settings


def fraction_text(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def with_schema(document: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema_version": get_settings().schema_version, **document}


def dumps(document: Mapping[str, Any]) -> str:
    """稳定的 JSON 文本：键顺序按插入顺序，末尾换行"""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


# ========== 分配 ==========


def allocation_to_dict(allocation: Allocation, scenario: Optional[Scenario] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "tasks": dict(allocation.tasks),
        "per_user": {u: list(amounts) for u, amounts in allocation.per_user_amounts.items()},
        "consumed": list(allocation.consumed),
        "residual": list(allocation.residual),
    }
    if scenario is not None:
        shares = per_task_shares(scenario)
        document["dominant_shares"] = {
            u: fraction_text(count * shares[u].share) for u, count in allocation.tasks.items()
        }
    return document


def divisible_to_dict(allocation: DivisibleAllocation) -> Dict[str, Any]:
    return {
        "shares": {u: fraction_text(s) for u, s in allocation.shares.items()},
        "task_equivalents": {u: fraction_text(t) for u, t in allocation.task_equivalents.items()},
        "floored_tasks": allocation.floored_tasks(),
        "amounts": {u: [fraction_text(a) for a in amounts] for u, amounts in allocation.amounts.items()},
        "used_fraction": [fraction_text(f) for f in allocation.used_fraction],
        "rounds": [
            {
                "x": fraction_text(r.x),
                "active_users": list(r.active_users),
                "saturated_resources": list(r.saturated_resources),
            }
            for r in allocation.rounds
        ],
    }


def pdrf_to_dict(result: PdrfResult, scenario: Optional[Scenario] = None) -> Dict[str, Any]:
    return {
        "k": fraction_text(result.k),
        "per_user_multiplier": dict(result.per_user_multiplier),
        "operations": result.operations,
        "allocation": allocation_to_dict(result.allocation, scenario),
    }


def deltas_to_dict(deltas: Mapping[UserId, int], buckets: Mapping[str, int]) -> Dict[str, Any]:
    return {"deltas": dict(deltas), "buckets": dict(buckets)}


# ========== DRF 轨迹 ==========


def trace_to_dict(trace: DrfTrace) -> Dict[str, Any]:
    return {
        "halt_reason": trace.halt_reason.value,
        "iterations": trace.iterations,
        "heap_operations": trace.heap_operations,
        "saturated": list(trace.saturated),
        "blocked_user": trace.blocked_user,
        "steps": [[s.iteration, s.user_id, fraction_text(s.share)] for s in trace.steps],
    }


def format_trace(trace: DrfTrace) -> str:
    """每步一行 `<iter>\\t<user>\\t<ds>`，最后一行为 `halt\\t<reason>`"""
    lines = [f"{s.iteration}\t{s.user_id}\t{fraction_text(s.share)}" for s in trace.steps]
    lines.append(f"halt\t{trace.halt_reason.value}")
    return "\n".join(lines) + "\n"


# ========== 周期 ==========


def profile_to_dict(profile: CycleProfile) -> Dict[str, Any]:
    return {
        "full_length": profile.full_length,
        "occurrences": dict(profile.occurrences),
        "lcm_ds": fraction_text(profile.lcm_ds),
        "basic_length": profile.basic_length,
        "basic_occurrences": dict(profile.basic_occurrences),
        "max_share": fraction_text(profile.max_share),
        "max_share_users": list(profile.max_share_users),
    }


def schedule_to_dict(pattern: SubcyclePattern) -> Dict[str, Any]:
    return {
        "user": pattern.user_id,
        "ratio": fraction_text(pattern.ratio),
        "base": pattern.base,
        "subcycles": pattern.subcycles,
        "extra_positions": list(pattern.extra_positions),
        "gaps": list(pattern.gaps),
    }


def decomposition_to_dict(decomposition: CycleDecomposition) -> Dict[str, Any]:
    return {
        "experimental": decomposition.experimental,
        "residual": list(decomposition.residual),
        "layers": [
            {
                "active_users": list(layer.active_users),
                "k": fraction_text(layer.k),
                "iterations": layer.iterations,
                "occurrences": dict(layer.occurrences),
                "basic_occurrences": dict(layer.basic_occurrences),
                "deviates_from_basic": list(layer.deviates_from_basic),
                "consumed": list(layer.consumed),
            }
            for layer in decomposition.layers
        ],
    }
