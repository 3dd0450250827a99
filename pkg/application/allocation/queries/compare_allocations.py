"""
比较两个具名分配器在同一场景上的逐用户任务数
"""

from dataclasses import dataclass
from typing import Dict

from mediatr import Mediator
from pydantic import BaseModel, ConfigDict, field_validator

from domain.allocation import ALLOCATOR_NAMES, Allocation, Scenario, get_allocator
from domain.experiments import bucket_deltas, compare
from infrastructure.logging import get_logger
from infrastructure.serialization import ScenarioReader

logger = get_logger(__name__)


class CompareAllocationsQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario_path: str
    reference: str = "drf"
    candidate: str = "pdrf"

    @field_validator("reference", "candidate")
    @classmethod
    def _known_allocator(cls, value: str) -> str:
        if value not in ALLOCATOR_NAMES:
            raise ValueError(f"unknown allocator '{value}', expected one of {', '.join(ALLOCATOR_NAMES)}")
        return value


@dataclass(frozen=True)
class ComparisonOutcome:
    scenario: Scenario
    reference: Allocation
    candidate: Allocation
    deltas: Dict[str, int]
    buckets: Dict[str, int]


@Mediator.handler
class CompareAllocationsHandler:
    def __init__(self, scenario_reader: ScenarioReader):
        self.scenario_reader = scenario_reader

    async def handle(self, request: CompareAllocationsQuery) -> ComparisonOutcome:
        scenario = self.scenario_reader.read(request.scenario_path)
        reference = get_allocator(request.reference).allocate(scenario)
        candidate = get_allocator(request.candidate).allocate(scenario)

        deltas = compare(reference, candidate)
        buckets = bucket_deltas(deltas)
        logger.info(
            f"{request.candidate} vs {request.reference}: "
            f"{buckets['unchanged']} unchanged, max under {buckets['max_under']}, max over {buckets['max_over']}"
        )
        return ComparisonOutcome(scenario, reference, candidate, deltas, buckets)
