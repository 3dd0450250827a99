"""
具名分配器

把各算法包装成统一接口 allocate(scenario) -> Allocation 的领域服务，
供比较与实验按名称选取参考方与候选方。
"""

from abc import abstractmethod
from typing import Dict, Tuple

from domain.common import DomainService, DomainValidationException

from .drf import DrfOptions, drf_allocate
from .edrf import edrf_allocate
from .pdrf import finishing_pass, pdrf_allocate
from .value_objects import Allocation, Scenario


class Allocator(DomainService):
    @abstractmethod
    def allocate(self, scenario: Scenario) -> Allocation:
        ...


class DrfAllocator(Allocator):
    def __init__(self, strict: bool = False):
        self.options = DrfOptions(strict_paper_mode=strict, collect_trace=False)
        self.name = "drf-strict" if strict else "drf"

    def allocate(self, scenario: Scenario) -> Allocation:
        allocation, _ = drf_allocate(scenario, self.options)
        return allocation


class PdrfAllocator(Allocator):
    def __init__(self, finished: bool = False):
        self.finished = finished
        self.name = "pdrf-finished" if finished else "pdrf"

    def allocate(self, scenario: Scenario) -> Allocation:
        result = pdrf_allocate(scenario)
        if self.finished:
            return finishing_pass(scenario, result)
        return result.allocation


class EdrfFloorAllocator(Allocator):
    """可分割分配的折合任务数向下取整"""

    name = "edrf-floor"

    def allocate(self, scenario: Scenario) -> Allocation:
        return Allocation.from_tasks(scenario, edrf_allocate(scenario).floored_tasks())


_REGISTRY: Dict[str, Allocator] = {
    allocator.name: allocator
    for allocator in (
        DrfAllocator(),
        DrfAllocator(strict=True),
        PdrfAllocator(),
        PdrfAllocator(finished=True),
        EdrfFloorAllocator(),
    )
}

ALLOCATOR_NAMES: Tuple[str, ...] = tuple(_REGISTRY)


def get_allocator(name: str) -> Allocator:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise DomainValidationException(
            "allocator", name, f"unknown allocator, expected one of {', '.join(ALLOCATOR_NAMES)}"
        ) from None
