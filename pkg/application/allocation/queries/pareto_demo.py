"""
Pareto 反例演示

容量 ⟨59,19⟩，A⟨1,4⟩、B⟨3,1⟩。不移除饱和用户时 DRF 在 A 放不下时停止，
剩余 ⟨33,3⟩ 仍够 B 再做 3 个任务；移除饱和用户后 B 把它们拿走。
"""

from dataclasses import dataclass
from typing import Dict

from mediatr import Mediator
from pydantic import BaseModel, ConfigDict

from domain.allocation import (
    Allocation,
    DemandVector,
    DrfOptions,
    DrfTrace,
    ResourceVector,
    Scenario,
    UserDemand,
    drf_allocate,
)
from infrastructure.logging import get_logger

logger = get_logger(__name__)

PARETO_SCENARIO = Scenario(
    resources=ResourceVector((59, 19)),
    users=(
        UserDemand("A", DemandVector((1, 4))),
        UserDemand("B", DemandVector((3, 1))),
    ),
)


class ParetoDemoQuery(BaseModel):
    model_config = ConfigDict(frozen=True)


@dataclass(frozen=True)
class ParetoDemoOutcome:
    scenario: Scenario
    strict: Allocation
    strict_trace: DrfTrace
    removal: Allocation
    removal_trace: DrfTrace

    @property
    def extra_tasks(self) -> Dict[str, int]:
        """移除饱和用户后每个用户多得的任务数"""
        return {u: self.removal.tasks[u] - self.strict.tasks[u] for u in self.strict.tasks}


@Mediator.handler
class ParetoDemoHandler:
    async def handle(self, request: ParetoDemoQuery) -> ParetoDemoOutcome:
        strict, strict_trace = drf_allocate(PARETO_SCENARIO, DrfOptions(strict_paper_mode=True))
        removal, removal_trace = drf_allocate(PARETO_SCENARIO, DrfOptions())
        logger.info(f"strict mode residual {strict.residual}, removal mode residual {removal.residual}")
        return ParetoDemoOutcome(PARETO_SCENARIO, strict, strict_trace, removal, removal_trace)
