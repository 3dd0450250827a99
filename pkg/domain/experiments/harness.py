"""
随机场景实验

按 (seed, trial_index) 派生独立的随机流生成场景，
比较参考 DRF 与 PDRF 的逐用户任务数偏差并分桶统计。
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Mapping

import numpy as np

from domain.allocation import (
    Allocation,
    DemandVector,
    DrfOptions,
    ResourceVector,
    Scenario,
    UserDemand,
    UserId,
    drf_allocate,
    finishing_pass,
    float_mismatches,
    pdrf_allocate,
)
from domain.common import UserSetMismatchException

from .value_objects import DeviationStats, ExperimentConfig, TrialStats


def _rng(config: ExperimentConfig, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(config.seed, spawn_key=(trial_index,)))


def user_id_for(index: int, n_users: int) -> UserId:
    width = max(4, len(str(n_users - 1)))
    return f"u{index:0{width}d}"


def generate_scenario(config: ExperimentConfig, trial_index: int) -> Scenario:
    """离散均匀分布抽样；同一 (seed, trial_index) 总是得到同一场景"""
    rng = _rng(config, trial_index)
    n, m = config.n_users, config.n_resources

    reserves = rng.integers(config.reserve_interval[0], config.reserve_interval[1], size=m, endpoint=True)
    demands = rng.integers(config.demand_interval[0], config.demand_interval[1], size=(n, m), endpoint=True)
    zero_rows = np.flatnonzero(~demands.any(axis=1))
    while zero_rows.size:
        demands[zero_rows] = rng.integers(
            config.demand_interval[0], config.demand_interval[1], size=(zero_rows.size, m), endpoint=True
        )
        zero_rows = np.flatnonzero(~demands.any(axis=1))

    users = tuple(
        UserDemand(
            id=user_id_for(index, n),
            demand=DemandVector(tuple(int(d) for d in row)),
        )
        for index, row in enumerate(demands)
    )
    return Scenario(resources=ResourceVector(tuple(int(r) for r in reserves)), users=users)


def compare(reference: Allocation, candidate: Allocation) -> Dict[UserId, int]:
    """delta = candidate − reference；负数为少分配，正数为多分配"""
    missing = [u for u in reference.tasks if u not in candidate.tasks]
    unexpected = [u for u in candidate.tasks if u not in reference.tasks]
    if missing or unexpected:
        raise UserSetMismatchException(missing, unexpected)
    return {u: candidate.tasks[u] - count for u, count in reference.tasks.items()}


def bucket_deltas(deltas: Mapping[UserId, int]) -> Dict[str, int]:
    """把逐用户偏差按 1 / 2 / >2 分桶"""
    buckets = dict.fromkeys(
        ("under_1", "under_2", "under_gt2", "over_1", "over_2", "over_gt2", "unchanged", "max_under", "max_over"),
        0,
    )
    for delta in deltas.values():
        if delta == 0:
            buckets["unchanged"] += 1
            continue
        side = "under" if delta < 0 else "over"
        size = abs(delta)
        key = f"{side}_{size}" if size <= 2 else f"{side}_gt2"
        buckets[key] += 1
        buckets[f"max_{side}"] = max(buckets[f"max_{side}"], size)
    return buckets


def run_trial(config: ExperimentConfig, trial_index: int) -> TrialStats:
    scenario = generate_scenario(config, trial_index)

    started = time.perf_counter()
    reference, trace = drf_allocate(scenario, config.drf_options)
    drf_seconds = time.perf_counter() - started

    started = time.perf_counter()
    result = pdrf_allocate(scenario)
    candidate = finishing_pass(scenario, result) if config.apply_finishing_pass else result.allocation
    pdrf_seconds = time.perf_counter() - started

    mismatches = len(float_mismatches(scenario, result)) if config.float_study else None
    return TrialStats(
        trial_index=trial_index,
        **bucket_deltas(compare(reference, candidate)),
        drf_iterations=trace.iterations,
        pdrf_operations=result.operations,
        float_mismatches=mismatches,
        drf_seconds=drf_seconds,
        pdrf_seconds=pdrf_seconds,
    )


def run_experiment(config: ExperimentConfig, workers: int = 1) -> DeviationStats:
    """逐次试验后聚合；workers > 1 时在进程池中并行，结果顺序与串行一致"""
    indices = range(config.trials)
    if workers > 1 and config.trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trials: List[TrialStats] = list(pool.map(run_trial, [config] * config.trials, indices))
    else:
        trials = [run_trial(config, index) for index in indices]
    return DeviationStats(config=config, trials=tuple(trials))


# ========== 基准实验预设 ==========

_TABLE1 = dict(n_users=1000, n_resources=10, reserve_interval=(50_000, 100_000), trials=1000, seed=0)
# 两资源表的参考 DRF 不移除饱和用户
_TABLE2 = dict(
    n_users=1000, n_resources=2, reserve_interval=(50_000, 100_000), trials=1000, seed=0,
    drf_options=DrfOptions(strict_paper_mode=True, collect_trace=False),
)

PRESETS: Dict[str, ExperimentConfig] = {
    "TABLE1_ROW1": ExperimentConfig(demand_interval=(1, 10), **_TABLE1),
    "TABLE1_ROW2": ExperimentConfig(demand_interval=(1, 20), **_TABLE1),
    "TABLE1_ROW3": ExperimentConfig(demand_interval=(10, 20), **_TABLE1),
    "TABLE2_ROW1": ExperimentConfig(demand_interval=(1, 100), **_TABLE2),
    "TABLE2_ROW2": ExperimentConfig(demand_interval=(1, 1000), **_TABLE2),
}
