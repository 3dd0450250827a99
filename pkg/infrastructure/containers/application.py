"""
应用容器（AppContainer）

管理应用层组件：Mediator、命令/查询处理器。
依赖 InfraContainer 获取基础设施。

Handler 注册流程：
1. 在此容器中定义 Handler 的 Provider
2. 在 wire_handlers() 中注册到 MediatorFactory
3. Mediator 会自动从容器获取 Handler 实例（依赖已注入）
"""

from dependency_injector import containers, providers

from application.allocation.commands import AllocateScenarioHandler
from application.allocation.queries import (
    AnalyzeCyclesHandler,
    CompareAllocationsHandler,
    ParetoDemoHandler,
)
from application.experiments.commands import RunBenchmarkHandler
from infrastructure.mediator import create_mediator, get_mediator_factory


class AppContainer(containers.DeclarativeContainer):
    """应用容器 - 管理应用层服务"""

    # 依赖基础设施容器
    infra = providers.DependenciesContainer()

    # ============ Mediator ============
    mediator = providers.Singleton(create_mediator)

    # ============ 分配 ============
    allocate_scenario_handler = providers.Factory(
        AllocateScenarioHandler,
        scenario_reader=infra.scenario_reader,
    )

    compare_allocations_handler = providers.Factory(
        CompareAllocationsHandler,
        scenario_reader=infra.scenario_reader,
    )

    analyze_cycles_handler = providers.Factory(
        AnalyzeCyclesHandler,
        scenario_reader=infra.scenario_reader,
    )

    pareto_demo_handler = providers.Factory(ParetoDemoHandler)

    # ============ 实验 ============
    run_benchmark_handler = providers.Factory(
        RunBenchmarkHandler,
        settings=infra.settings,
        stats_exporter=infra.stats_exporter,
    )


def wire_handlers(container: AppContainer) -> None:
    """将 Handler Provider 注册到 MediatorFactory"""
    factory = get_mediator_factory()
    factory.register_handlers({
        AllocateScenarioHandler: container.allocate_scenario_handler,
        CompareAllocationsHandler: container.compare_allocations_handler,
        AnalyzeCyclesHandler: container.analyze_cycles_handler,
        ParetoDemoHandler: container.pareto_demo_handler,
        RunBenchmarkHandler: container.run_benchmark_handler,
    })
