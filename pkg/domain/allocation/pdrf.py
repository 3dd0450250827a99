"""
预计算 DRF（PDRF）

不逐步模拟 progressive filling，而是直接求周期迭代因子
    k = min_r r / Σ_i (ds*/ds_i · d_ir)
并给每个用户分配 ⌊k · ds*/ds_i⌋ 个任务。
整数化由向下取整完成，因此结果不会超出容量。
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from domain.common import UnnormalizedWeightsException, UserSetMismatchException

from .shares import ensure_valid, per_task_shares
from .value_objects import Allocation, Rational, Scenario, UserId


@dataclass(frozen=True)
class PdrfResult:
    """k 未取整；per_user_multiplier[i] = ⌊k·ds*/ds_i⌋ = allocation.tasks[i]。

    operations 是闭式计算执行的算术与比较次数，规模为 Θ(n·m)。
    """

    k: Rational
    allocation: Allocation
    per_user_multiplier: Mapping[UserId, int]
    operations: int = 0


def _check_weights(scenario: Scenario) -> None:
    """加权模式下要求每种资源上 Σ_i w_ir = 1"""
    if not scenario.is_weighted:
        return
    for index in range(scenario.n_resources):
        total = sum(
            (u.weight[index] if u.weight is not None else Fraction(1) for u in scenario.users),
            Fraction(0),
        )
        if total != 1:
            raise UnnormalizedWeightsException(index, total)


def _shares(scenario: Scenario) -> Dict[UserId, Rational]:
    ensure_valid(scenario)
    _check_weights(scenario)
    return {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}


def _min_ratio(scenario: Scenario, coefficients: Mapping[UserId, Rational]) -> Tuple[Rational, int]:
    """min_r r / Σ_i c_i·d_ir，跳过无人需求的资源；同时返回运算次数"""
    best: Optional[Rational] = None
    operations = 0
    for index, capacity in enumerate(scenario.resources):
        column = Fraction(0)
        for user in scenario.users:
            column += coefficients[user.id] * user.demand[index]
            operations += 2
        if column == 0:
            continue
        ratio = Fraction(capacity) / column
        operations += 2
        if best is None or ratio < best:
            best = ratio
    return (best if best is not None else Fraction(0)), operations


def pdrf_k(scenario: Scenario) -> Rational:
    """未化简形式的周期迭代因子 k（精确分数）"""
    shares = _shares(scenario)
    max_share = max(shares.values())
    k, _ = _min_ratio(scenario, {u: max_share / s for u, s in shares.items()})
    return k


def pdrf_k_simplified(scenario: Scenario) -> Rational:
    """化简形式 k′ = min_r r / Σ_i d_ir/ds_i；精确算术下 k = k′ / ds*"""
    shares = _shares(scenario)
    k_prime, _ = _min_ratio(scenario, {u: 1 / s for u, s in shares.items()})
    return k_prime


def pdrf_allocate(scenario: Scenario) -> PdrfResult:
    shares = _shares(scenario)
    n, m = scenario.n_users, scenario.n_resources
    # 每个用户 m 次除法求 fd、m 次比较求最大值，再 n 次比较求 ds*
    operations = 2 * n * m + n

    max_share = max(shares.values())
    ratios = {u: max_share / s for u, s in shares.items()}
    operations += n
    k, column_operations = _min_ratio(scenario, ratios)
    operations += column_operations

    multipliers: Dict[UserId, int] = {}
    for user_id, ratio in ratios.items():
        multipliers[user_id] = math.floor(k * ratio)
        operations += 2

    return PdrfResult(
        k=k,
        allocation=Allocation.from_tasks(scenario, multipliers),
        per_user_multiplier=multipliers,
        operations=operations,
    )


def finishing_pass(scenario: Scenario, result: PdrfResult) -> Allocation:
    """按已分配主导份额升序（并列时单任务份额降序、再按 id）扫描一遍，
    每个用户在剩余容量允许时最多再得一个任务。"""
    shares = {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}
    tasks = dict(result.allocation.tasks)
    missing, unexpected = set(shares) - set(tasks), set(tasks) - set(shares)
    if missing or unexpected:
        raise UserSetMismatchException(sorted(missing), sorted(unexpected))

    order = sorted(shares, key=lambda u: (tasks[u] * shares[u], -shares[u], u))
    residual = list(result.allocation.residual)
    for user_id in order:
        demand = scenario.user(user_id).demand
        if all(d <= r for d, r in zip(demand, residual)):
            for index, d in enumerate(demand):
                residual[index] -= d
            tasks[user_id] += 1
    return Allocation.from_tasks(scenario, tasks)


# ========== 浮点对照 ==========


def _float_shares(scenario: Scenario) -> Dict[UserId, float]:
    return {user_id: float(share) for user_id, share in _shares(scenario).items()}


def _float_min_ratio(scenario: Scenario, coefficients: Mapping[UserId, float]) -> float:
    best: Optional[float] = None
    for index, capacity in enumerate(scenario.resources):
        column = sum(coefficients[u.id] * u.demand[index] for u in scenario.users)
        if column == 0:
            continue
        ratio = capacity / column
        if best is None or ratio < best:
            best = ratio
    return best if best is not None else 0.0


def pdrf_k_float(scenario: Scenario, simplified: bool = False) -> float:
    """IEEE 双精度下的 k；simplified=True 时按 k′ / ds* 的路径计算"""
    shares = _float_shares(scenario)
    max_share = max(shares.values())
    if simplified:
        return _float_min_ratio(scenario, {u: 1 / s for u, s in shares.items()}) / max_share
    return _float_min_ratio(scenario, {u: max_share / s for u, s in shares.items()})


def pdrf_tasks_float(scenario: Scenario, simplified: bool = False) -> Dict[UserId, int]:
    """浮点路径下的任务数：未化简为 ⌊k·ds*/ds_i⌋，化简为 ⌊k′/ds_i⌋"""
    shares = _float_shares(scenario)
    max_share = max(shares.values())
    if simplified:
        k_prime = _float_min_ratio(scenario, {u: 1 / s for u, s in shares.items()})
        return {u: math.floor(k_prime / s) for u, s in shares.items()}
    k = _float_min_ratio(scenario, {u: max_share / s for u, s in shares.items()})
    return {u: math.floor(k * max_share / s) for u, s in shares.items()}


def float_mismatches(scenario: Scenario, exact: PdrfResult, simplified: bool = True) -> List[UserId]:
    """浮点任务数与精确结果不一致的用户"""
    floating = pdrf_tasks_float(scenario, simplified=simplified)
    return [u for u, count in exact.per_user_multiplier.items() if floating[u] != count]
