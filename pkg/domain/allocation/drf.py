"""
迭代式 DRF（progressive filling）

每一步从二叉堆中取出已分配主导份额最小的用户，为其分配一个完整任务。
堆键为 (已分配主导份额 升序, 单任务主导份额 降序, 用户 id 升序)：
全零起点时先选单任务份额较高的用户，其余并列按 id 决定，结果完全确定。
"""

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from domain.common import BaseValueObject

from .shares import ensure_valid, per_task_shares
from .value_objects import Allocation, Rational, Scenario, UserId


class HaltReason(str, Enum):
    RESOURCE_EXHAUSTED = "resource-exhausted"
    ALL_SATURATED = "all-saturated"


@dataclass(frozen=True)
class DrfOptions(BaseValueObject):
    """DRF 运行选项。

    remove_saturated: 放不下下一个任务的用户被标记为饱和并移出选择（默认开启）；
        关闭时循环在第一次放不下时停止（原始算法的字面行为）。
    strict_paper_mode: 等价于 remove_saturated=False，并强制之。
    collect_trace: 是否记录每一步的 (迭代号, 用户, 分配后份额)。
    """

    remove_saturated: bool = True
    strict_paper_mode: bool = False
    collect_trace: bool = True

    def __post_init__(self):
        if self.strict_paper_mode:
            object.__setattr__(self, "remove_saturated", False)
        super().__post_init__()


class TraceStep(NamedTuple):
    iteration: int
    user_id: UserId
    share: Rational


@dataclass(frozen=True)
class DrfTrace:
    """执行轨迹与计数器。

    heap_operations 按每次选择一次 pop、每次成功分配一次 push 计数。
    blocked_user 仅在 RESOURCE_EXHAUSTED 时给出：最后一个放不下任务的用户。
    """

    steps: Tuple[TraceStep, ...]
    halt_reason: HaltReason
    iterations: int
    heap_operations: int
    saturated: Tuple[UserId, ...] = ()
    blocked_user: Optional[UserId] = None

    def order(self) -> List[UserId]:
        return [step.user_id for step in self.steps]


def drf_allocate(
    scenario: Scenario,
    options: Optional[DrfOptions] = None,
) -> Tuple[Allocation, DrfTrace]:
    """DRF progressive filling，返回整数分配与执行轨迹"""
    options = options or DrfOptions()
    ensure_valid(scenario)

    task_shares = {user_id: ds.share for user_id, ds in per_task_shares(scenario).items()}
    demands = {u.id: u.demand.amounts for u in scenario.users}
    residual = list(scenario.resources.amounts)
    tasks: Dict[UserId, int] = {u.id: 0 for u in scenario.users}

    heap: List[Tuple[Rational, Rational, UserId]] = [
        (Fraction(0), -task_shares[u.id], u.id) for u in scenario.users
    ]
    heapq.heapify(heap)

    steps: List[TraceStep] = []
    saturated: List[UserId] = []
    iterations = 0
    heap_operations = 0
    halt_reason = HaltReason.ALL_SATURATED
    blocked_user: Optional[UserId] = None

    while heap:
        allocated, negative_task_share, user_id = heapq.heappop(heap)
        heap_operations += 1
        demand = demands[user_id]

        if all(d <= r for d, r in zip(demand, residual)):
            for index, d in enumerate(demand):
                residual[index] -= d
            tasks[user_id] += 1
            iterations += 1
            allocated = allocated - negative_task_share
            if options.collect_trace:
                steps.append(TraceStep(iterations, user_id, allocated))
            heapq.heappush(heap, (allocated, negative_task_share, user_id))
            heap_operations += 1
        elif options.remove_saturated:
            saturated.append(user_id)
        else:
            halt_reason = HaltReason.RESOURCE_EXHAUSTED
            blocked_user = user_id
            break

    trace = DrfTrace(
        steps=tuple(steps),
        halt_reason=halt_reason,
        iterations=iterations,
        heap_operations=heap_operations,
        saturated=tuple(saturated),
        blocked_user=blocked_user,
    )
    return Allocation.from_tasks(scenario, tasks), trace


def predicted_iterations(scenario: Scenario) -> Rational:
    """min_r { r / μ_dr }：容量与各资源平均需求之比的最小值。

    只是对迭代次数的期望估计，不是上界；无人需求的资源不参与取最小。
    """
    ensure_valid(scenario)
    n = scenario.n_users
    best: Optional[Rational] = None
    for index, capacity in enumerate(scenario.resources):
        mean = Fraction(sum(u.demand[index] for u in scenario.users), n)
        if mean == 0:
            continue
        ratio = Fraction(capacity) / mean
        if best is None or ratio < best:
            best = ratio
    return best if best is not None else Fraction(0)


def selection_cost(n_users: int) -> float:
    """单次堆选择的代价 log2(n)，与 predicted_iterations 分开报告"""
    return math.log2(n_users) if n_users > 1 else 1.0
