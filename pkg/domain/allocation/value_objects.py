"""
分配领域的值对象

场景（Scenario）、资源向量、需求向量、权重向量以及分配结果（Allocation）。
所有份额类数值都使用精确分数 Rational（fractions.Fraction），需求与容量使用整数。
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from domain.common import BaseValueObject

# 精确分数：分母恒为正且自动约分，运算不舍入
Rational = Fraction

UserId = str


@dataclass(frozen=True)
class ResourceVector(BaseValueObject):
    """每种资源一个非负整数，长度 m ≥ 1"""

    amounts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "amounts", tuple(self.amounts))
        super().__post_init__()

    def validate(self) -> None:
        if len(self.amounts) == 0:
            self._reject(self.amounts, "at least one resource type is required")
        for amount in self.amounts:
            if isinstance(amount, bool) or not isinstance(amount, int):
                self._reject(self.amounts, f"entry {amount!r} is not an integer")
            if amount < 0:
                self._reject(self.amounts, f"entry {amount} is negative")

    @classmethod
    def zeros(cls, m: int) -> "ResourceVector":
        return cls((0,) * m)

    def __len__(self) -> int:
        return len(self.amounts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.amounts)

    def __getitem__(self, index: int) -> int:
        return self.amounts[index]

    def __add__(self, other: "ResourceVector") -> "ResourceVector":
        return ResourceVector(tuple(a + b for a, b in zip(self.amounts, other.amounts, strict=True)))

    def __sub__(self, other: "ResourceVector") -> "ResourceVector":
        return ResourceVector(tuple(a - b for a, b in zip(self.amounts, other.amounts, strict=True)))

    def fits_within(self, other: "ResourceVector") -> bool:
        """逐项 self ≤ other"""
        return all(a <= b for a, b in zip(self.amounts, other.amounts, strict=True))

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.amounts) + ">"


@dataclass(frozen=True)
class DemandVector(BaseValueObject):
    """单个任务的需求向量：非负整数，至少一项为正"""

    amounts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "amounts", tuple(self.amounts))
        super().__post_init__()

    def validate(self) -> None:
        if len(self.amounts) == 0:
            self._reject(self.amounts, "at least one resource type is required")
        for amount in self.amounts:
            if isinstance(amount, bool) or not isinstance(amount, int):
                self._reject(self.amounts, f"entry {amount!r} is not an integer")
            if amount < 0:
                self._reject(self.amounts, f"entry {amount} is negative")
        if not any(self.amounts):
            self._reject(self.amounts, "all-zero demand vector")

    def __len__(self) -> int:
        return len(self.amounts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.amounts)

    def __getitem__(self, index: int) -> int:
        return self.amounts[index]

    def times(self, tasks: int) -> ResourceVector:
        """tasks 个任务占用的资源量"""
        return ResourceVector(tuple(a * tasks for a in self.amounts))

    def __str__(self) -> str:
        return "<" + ",".join(str(a) for a in self.amounts) + ">"


@dataclass(frozen=True)
class WeightVector(BaseValueObject):
    """每种资源一个正的分数权重"""

    weights: Tuple[Rational, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        super().__post_init__()

    def validate(self) -> None:
        if len(self.weights) == 0:
            self._reject(self.weights, "at least one weight is required")
        for weight in self.weights:
            if weight <= 0:
                self._reject(self.weights, f"weight {weight} is not positive")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self) -> Iterator[Rational]:
        return iter(self.weights)

    def __getitem__(self, index: int) -> Rational:
        return self.weights[index]


@dataclass(frozen=True)
class UserDemand(BaseValueObject):
    """场景中的一个用户：标识、单任务需求、可选权重"""

    id: UserId
    demand: DemandVector
    weight: Optional[WeightVector] = None

    def validate(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            self._reject(self.id, "user id must be a non-empty string")


@dataclass(frozen=True)
class Scenario(BaseValueObject):
    """资源容量 + 用户需求集合，所有分配器的输入。

    跨对象的约束（id 唯一、向量长度一致、权重归一化）由
    shares.validate_scenario 统一检查并返回错误列表。
    """

    resources: ResourceVector
    users: Tuple[UserDemand, ...]

    def __post_init__(self):
        object.__setattr__(self, "users", tuple(self.users))
        super().__post_init__()

    @property
    def n_users(self) -> int:
        return len(self.users)

    @property
    def n_resources(self) -> int:
        return len(self.resources)

    @property
    def user_ids(self) -> Tuple[UserId, ...]:
        return tuple(u.id for u in self.users)

    @property
    def is_weighted(self) -> bool:
        return any(u.weight is not None for u in self.users)

    def user(self, user_id: UserId) -> UserDemand:
        for u in self.users:
            if u.id == user_id:
                return u
        raise KeyError(user_id)

    def with_resources(self, resources: ResourceVector) -> "Scenario":
        return Scenario(resources=resources, users=self.users)

    def restricted_to(self, user_ids: Sequence[UserId]) -> "Scenario":
        keep = set(user_ids)
        return Scenario(resources=self.resources, users=tuple(u for u in self.users if u.id in keep))


@dataclass(frozen=True)
class Allocation(BaseValueObject):
    """整数分配结果：每个用户的任务数及其资源占用，外加剩余容量"""

    tasks: Mapping[UserId, int]
    consumed: ResourceVector
    residual: ResourceVector
    per_user_amounts: Mapping[UserId, ResourceVector] = field(default_factory=dict)

    def validate(self) -> None:
        for user_id, count in self.tasks.items():
            if count < 0:
                self._reject(self.tasks, f"negative task count for {user_id}")
        total = ResourceVector.zeros(len(self.consumed))
        for amounts in self.per_user_amounts.values():
            total = total + amounts
        if total != self.consumed:
            self._reject(self.consumed, "consumed differs from the sum of per-user amounts")

    @classmethod
    def from_tasks(cls, scenario: Scenario, tasks: Mapping[UserId, int]) -> "Allocation":
        """按场景用户顺序由任务数构造分配，consumed + residual = resources"""
        ordered: Dict[UserId, int] = {u.id: int(tasks.get(u.id, 0)) for u in scenario.users}
        per_user = {u.id: u.demand.times(ordered[u.id]) for u in scenario.users}
        consumed = ResourceVector.zeros(scenario.n_resources)
        for amounts in per_user.values():
            consumed = consumed + amounts
        return cls(
            tasks=ordered,
            consumed=consumed,
            residual=scenario.resources - consumed,
            per_user_amounts=per_user,
        )

    @property
    def total_tasks(self) -> int:
        return sum(self.tasks.values())
