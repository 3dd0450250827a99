"""
分配一个场景文件

drf / edrf / pdrf 三选一；pdrf 可附加补齐扫描，drf 可附带执行轨迹。
"""

from dataclasses import dataclass
from typing import Literal, Optional

from mediatr import Mediator
from pydantic import BaseModel, ConfigDict

from domain.allocation import (
    Allocation,
    DivisibleAllocation,
    DrfOptions,
    DrfTrace,
    PdrfResult,
    Scenario,
    drf_allocate,
    edrf_allocate,
    finishing_pass,
    pdrf_allocate,
)
from domain.common import InvalidOperationException
from infrastructure.logging import get_logger
from infrastructure.serialization import ScenarioReader

logger = get_logger(__name__)


class AllocateScenarioCommand(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario_path: str
    algo: Literal["drf", "edrf", "pdrf"] = "drf"
    remove_saturated: bool = True
    finishing_pass: bool = False
    collect_trace: bool = False


@dataclass(frozen=True)
class AllocationOutcome:
    """整数结果放在 allocation；edrf 的可分割结果放在 divisible"""

    algo: str
    scenario: Scenario
    allocation: Optional[Allocation] = None
    divisible: Optional[DivisibleAllocation] = None
    trace: Optional[DrfTrace] = None
    pdrf: Optional[PdrfResult] = None


@Mediator.handler
class AllocateScenarioHandler:
    def __init__(self, scenario_reader: ScenarioReader):
        self.scenario_reader = scenario_reader

    async def handle(self, request: AllocateScenarioCommand) -> AllocationOutcome:
        if request.finishing_pass and request.algo != "pdrf":
            raise InvalidOperationException("finishing_pass", f"only applies to pdrf, not {request.algo}")

        scenario = self.scenario_reader.read(request.scenario_path)
        logger.debug(f"scenario: {scenario.n_users} users, {scenario.n_resources} resources")

        if request.algo == "drf":
            options = DrfOptions(
                remove_saturated=request.remove_saturated,
                collect_trace=request.collect_trace,
            )
            allocation, trace = drf_allocate(scenario, options)
            logger.info(f"drf halted ({trace.halt_reason.value}) after {trace.iterations} iterations")
            return AllocationOutcome(
                request.algo, scenario, allocation=allocation,
                trace=trace if request.collect_trace else None,
            )

        if request.algo == "edrf":
            if scenario.is_weighted:
                logger.warning("edrf ignores user weights")
            divisible = edrf_allocate(scenario)
            logger.info(f"edrf finished in {len(divisible.rounds)} round(s)")
            return AllocationOutcome(request.algo, scenario, divisible=divisible)

        result = pdrf_allocate(scenario)
        logger.info(f"pdrf k = {result.k}")
        allocation = finishing_pass(scenario, result) if request.finishing_pass else result.allocation
        return AllocationOutcome(request.algo, scenario, allocation=allocation, pdrf=result)
