from .analyze_cycles import AnalyzeCyclesHandler, AnalyzeCyclesQuery, CycleAnalysis
from .compare_allocations import CompareAllocationsHandler, CompareAllocationsQuery, ComparisonOutcome
from .pareto_demo import PARETO_SCENARIO, ParetoDemoHandler, ParetoDemoOutcome, ParetoDemoQuery

__all__ = [
    "AnalyzeCyclesHandler",
    "AnalyzeCyclesQuery",
    "CycleAnalysis",
    "CompareAllocationsHandler",
    "CompareAllocationsQuery",
    "ComparisonOutcome",
    "PARETO_SCENARIO",
    "ParetoDemoHandler",
    "ParetoDemoOutcome",
    "ParetoDemoQuery",
]
