"""
可分割分配的预计算（EDRF 形式）

把每个用户的分数需求按其主导份额归一化（主导资源项恰为 1），
每一轮求最大缩放因子 x 使所有活跃用户同步增长，直到某种资源耗尽；
然后移除有主导资源已耗尽的用户，进入下一轮。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Mapping, NamedTuple, Sequence, Tuple

from domain.common import BaseValueObject, InvalidOperationException

from .shares import dominant_share, ensure_valid, fractional_demands
from .value_objects import DemandVector, Rational, ResourceVector, Scenario, UserId


@dataclass(frozen=True)
class NormalizedDemand(BaseValueObject):
    """d̂_ir = fd_ir / ds_i：最大项恰为 1，其余落在 [0, 1]"""

    entries: Tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))
        super().__post_init__()

    def validate(self) -> None:
        if not self.entries:
            self._reject(self.entries, "empty normalized demand")
        if max(self.entries) != 1:
            self._reject(self.entries, "maximum entry must be exactly 1")
        if min(self.entries) < 0:
            self._reject(self.entries, "entries must be non-negative")

    def __getitem__(self, index: int) -> Rational:
        return self.entries[index]

    def __len__(self) -> int:
        return len(self.entries)


class RoundOutcome(NamedTuple):
    x: Rational
    saturated_resources: FrozenSet[int]


class RoundRecord(NamedTuple):
    x: Rational
    active_users: Tuple[UserId, ...]
    saturated_resources: Tuple[int, ...]


@dataclass(frozen=True)
class DivisibleAllocation:
    """可分割分配结果。

    shares: 每个用户累计获得的主导份额；
    amounts: 每个用户每种资源获得的（分数）数量 x·d̂_ir·r 的累加；
    task_equivalents: shares_i / ds_i，即折合的任务数（可为分数）；
    used_fraction: 每种资源已分配的比例，恒 ≤ 1。
    """

    shares: Mapping[UserId, Rational]
    amounts: Mapping[UserId, Tuple[Rational, ...]]
    rounds: Tuple[RoundRecord, ...]
    task_equivalents: Mapping[UserId, Rational]
    used_fraction: Tuple[Rational, ...]

    def floored_tasks(self) -> Dict[UserId, int]:
        """向下取整得到的整数任务数"""
        return {user_id: int(t.numerator // t.denominator) for user_id, t in self.task_equivalents.items()}


def normalize(demand: DemandVector, capacities: ResourceVector) -> NormalizedDemand:
    fd = fractional_demands(demand, capacities)
    ds = dominant_share(demand, capacities).share
    return NormalizedDemand(tuple(f / ds for f in fd))


def edrf_round(users: Sequence[NormalizedDemand], capacities: Sequence[Rational]) -> RoundOutcome:
    """x = min_r remaining_r / Σ_i d̂_ir，返回 x 与取得最小值的资源集合。

    capacities 是各资源剩余的比例（首轮全为 1 时即 x = 1 / max_r Σ_i d̂_ir）。
    """
    if not users:
        raise InvalidOperationException("edrf_round", "no active users")

    best: Rational | None = None
    argmin: List[int] = []
    for index, remaining in enumerate(capacities):
        column = sum((u[index] for u in users), Fraction(0))
        if column == 0:
            continue
        ratio = Fraction(remaining) / column
        if best is None or ratio < best:
            best, argmin = ratio, [index]
        elif ratio == best:
            argmin.append(index)
    # 每个归一化需求都有一项为 1，因此至少有一列非零
    assert best is not None
    return RoundOutcome(best, frozenset(argmin))


def edrf_allocate(scenario: Scenario, freeze_blocked: bool = False) -> DivisibleAllocation:
    """多轮可分割分配。

    每轮：对活跃用户求 x，给每人增加 x 的主导份额及 x·d̂_ir 的各资源比例，
    再移除在某个已耗尽资源上归一化需求为 1 的用户（即某个主导资源已耗尽）。
    x = 0（活跃用户都被耗尽的资源卡住）时结束。
    freeze_blocked=True 时，凡在已耗尽资源上有正需求的用户也一并移除。
    权重被忽略：加权形式不在本模块范围内。
    """
    ensure_valid(scenario)
    capacities = scenario.resources
    m = scenario.n_resources

    normalized = {u.id: normalize(u.demand, capacities) for u in scenario.users}
    dominant = {u.id: dominant_share(u.demand, capacities) for u in scenario.users}

    remaining: List[Rational] = [Fraction(1) if c > 0 else Fraction(0) for c in capacities]
    shares: Dict[UserId, Rational] = {u.id: Fraction(0) for u in scenario.users}
    active: List[UserId] = list(scenario.user_ids)
    rounds: List[RoundRecord] = []

    while active:
        outcome = edrf_round([normalized[i] for i in active], remaining)
        if outcome.x == 0:
            break
        for user_id in active:
            shares[user_id] += outcome.x
        for index in range(m):
            column = sum((normalized[i][index] for i in active), Fraction(0))
            remaining[index] -= outcome.x * column
        rounds.append(RoundRecord(outcome.x, tuple(active), tuple(sorted(outcome.saturated_resources))))

        depleted = {index for index in range(m) if remaining[index] == 0}
        # 任一取最大值 1 的资源耗尽即视为饱和，并列的主导资源同样生效
        retired = {i for i in active if any(normalized[i][r] == 1 for r in depleted)}
        if freeze_blocked:
            retired |= {i for i in active if any(normalized[i][r] > 0 for r in depleted)}
        active = [i for i in active if i not in retired]

    task_equivalents = {u.id: shares[u.id] / dominant[u.id].share for u in scenario.users}
    amounts = {
        u.id: tuple(task_equivalents[u.id] * d for d in u.demand)
        for u in scenario.users
    }
    used = tuple(
        Fraction(1) - remaining[index] if capacities[index] > 0 else Fraction(0)
        for index in range(m)
    )
    return DivisibleAllocation(
        shares=shares,
        amounts=amounts,
        rounds=tuple(rounds),
        task_equivalents=task_equivalents,
        used_fraction=used,
    )
