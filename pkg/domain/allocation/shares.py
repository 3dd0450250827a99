"""
份额计算

分数需求 fd_ir = d_ir / r、主导份额 ds_i = max_r fd_ir（加权时为 max_r fd_ir / w_ir）、
场景校验。所有分配器共享这里的计算。
"""

from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence

from domain.common import (
    DomainValidationException,
    InfeasibleDemandException,
    ScenarioValidationException,
)

from .value_objects import (
    DemandVector,
    Rational,
    ResourceVector,
    Scenario,
    UserDemand,
    UserId,
    WeightVector,
)


class DominantShare(NamedTuple):
    """主导份额及取得该份额的资源下标"""

    share: Rational
    resource_index: int


def fractional_demands(demand: DemandVector, capacities: ResourceVector) -> tuple[Rational, ...]:
    """逐资源计算 demand[r] / capacities[r]（精确分数）"""
    if len(demand) != len(capacities):
        raise DomainValidationException(
            "demand", demand.amounts,
            f"length {len(demand)} does not match {len(capacities)} resources",
        )
    result = []
    for index, (amount, capacity) in enumerate(zip(demand, capacities)):
        if capacity == 0:
            if amount > 0:
                raise InfeasibleDemandException(index, amount)
            result.append(Fraction(0))
        else:
            result.append(Fraction(amount, capacity))
    return tuple(result)


def dominant_share(
    demand: DemandVector,
    capacities: ResourceVector,
    weight: Optional[WeightVector] = None,
) -> DominantShare:
    """主导份额；最大值并列时取下标最小的资源"""
    fd = fractional_demands(demand, capacities)
    if weight is not None:
        if len(weight) != len(fd):
            raise DomainValidationException(
                "weight", weight.weights,
                f"length {len(weight)} does not match {len(fd)} resources",
            )
        fd = tuple(f / w for f, w in zip(fd, weight))

    best_index = 0
    for index in range(1, len(fd)):
        if fd[index] > fd[best_index]:
            best_index = index
    return DominantShare(fd[best_index], best_index)


def user_dominant_share(user: UserDemand, capacities: ResourceVector) -> DominantShare:
    return dominant_share(user.demand, capacities, user.weight)


def per_task_shares(scenario: Scenario) -> Dict[UserId, DominantShare]:
    """每个用户单个任务的（加权）主导份额，按场景顺序"""
    return {u.id: user_dominant_share(u, scenario.resources) for u in scenario.users}


def validate_scenario(scenario: Scenario, normalized_weights: bool = False) -> List[str]:
    """返回场景违反的全部约束；空列表表示合法。

    normalized_weights=True 时额外要求所有用户都带权重，且每种资源上 Σ_i w_ir = 1。
    """
    errors: List[str] = []
    m = scenario.n_resources

    if scenario.n_users == 0:
        errors.append("scenario has no users")

    seen: set = set()
    for user in scenario.users:
        if user.id in seen:
            errors.append(f"duplicate user id '{user.id}'")
        seen.add(user.id)

        if len(user.demand) != m:
            errors.append(
                f"user '{user.id}': demand length {len(user.demand)} != {m} resources"
            )
        else:
            for index, (amount, capacity) in enumerate(zip(user.demand, scenario.resources)):
                if amount > 0 and capacity == 0:
                    errors.append(
                        f"user '{user.id}': positive demand on resource {index} with zero capacity"
                    )

        if user.weight is not None and len(user.weight) != m:
            errors.append(
                f"user '{user.id}': weight length {len(user.weight)} != {m} resources"
            )

    if normalized_weights and scenario.n_users > 0:
        unweighted = [u.id for u in scenario.users if u.weight is None]
        if unweighted:
            errors.append(f"normalized weights required but missing for {unweighted}")
        elif all(len(u.weight) == m for u in scenario.users):
            for index in range(m):
                total = sum((u.weight[index] for u in scenario.users), Fraction(0))
                if total != 1:
                    errors.append(f"weights on resource {index} sum to {total}, expected 1")

    return errors


def ensure_valid(scenario: Scenario, normalized_weights: bool = False) -> None:
    """validate_scenario 的抛异常版本，供分配器入口使用"""
    errors = validate_scenario(scenario, normalized_weights=normalized_weights)
    if errors:
        raise ScenarioValidationException(errors)


def normalize_weights(scenario: Scenario) -> Scenario:
    """把原始权重归一化为每种资源 Σ_i w_ir = 1；未给权重的用户按全 1 处理"""
    m = scenario.n_resources
    raw = [
        u.weight.weights if u.weight is not None else (Fraction(1),) * m
        for u in scenario.users
    ]
    totals: Sequence[Rational] = [sum((w[r] for w in raw), Fraction(0)) for r in range(m)]
    users = tuple(
        UserDemand(
            id=u.id,
            demand=u.demand,
            weight=WeightVector(tuple(w[r] / totals[r] for r in range(m))),
        )
        for u, w in zip(scenario.users, raw)
    )
    return Scenario(resources=scenario.resources, users=users)
