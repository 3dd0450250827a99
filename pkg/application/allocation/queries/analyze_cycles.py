"""
周期分析：完整周期、基本子周期、子周期中的额外出现，以及可选的高阶分解
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from mediatr import Mediator
from pydantic import BaseModel, ConfigDict

from domain.allocation import (
    CycleDecomposition,
    CycleProfile,
    Rational,
    Scenario,
    SubcyclePattern,
    cycle_profile,
    decompose_higher_order,
    predicted_iterations,
    selection_cost,
    subcycle_schedule,
)
from infrastructure.logging import get_logger
from infrastructure.serialization import ScenarioReader

logger = get_logger(__name__)


class AnalyzeCyclesQuery(BaseModel):
    model_config = ConfigDict(frozen=True)

    scenario_path: str
    decompose: bool = False


@dataclass(frozen=True)
class CycleAnalysis:
    scenario: Scenario
    profile: CycleProfile
    schedule: Tuple[SubcyclePattern, ...]
    predicted_iterations: Rational
    selection_cost: float
    decomposition: Optional[CycleDecomposition] = None


@Mediator.handler
class AnalyzeCyclesHandler:
    def __init__(self, scenario_reader: ScenarioReader):
        self.scenario_reader = scenario_reader

    async def handle(self, request: AnalyzeCyclesQuery) -> CycleAnalysis:
        scenario = self.scenario_reader.read(request.scenario_path)
        profile = cycle_profile(scenario)
        logger.info(f"full cycle {profile.full_length}, basic subcycle {profile.basic_length}")

        decomposition = None
        if request.decompose:
            decomposition = decompose_higher_order(scenario)
            logger.info(f"decomposition: {len(decomposition.layers)} layer(s), residual {decomposition.residual}")

        return CycleAnalysis(
            scenario=scenario,
            profile=profile,
            schedule=subcycle_schedule(scenario),
            predicted_iterations=predicted_iterations(scenario),
            selection_cost=selection_cost(scenario.n_users),
            decomposition=decomposition,
        )
