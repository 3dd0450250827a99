from .allocate_scenario import AllocateScenarioCommand, AllocateScenarioHandler, AllocationOutcome

__all__ = ["AllocateScenarioCommand", "AllocateScenarioHandler", "AllocationOutcome"]
