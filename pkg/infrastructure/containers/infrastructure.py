"""
基础设施容器（InfraContainer）

管理所有基础设施组件：配置、场景读取、统计导出。
"""

from dependency_injector import containers, providers

from infrastructure.config.settings import get_settings
from infrastructure.export import StatsExporter
from infrastructure.serialization import ScenarioReader


class InfraContainer(containers.DeclarativeContainer):
    """基础设施容器 - 管理配置和技术实现"""

    # ============ 配置 ============

    # 与 get_settings() 共享同一实例
    settings = providers.Singleton(get_settings)

    # ============ 文件格式 ============

    scenario_reader = providers.Singleton(ScenarioReader)

    stats_exporter = providers.Factory(
        StatsExporter,
        settings=settings
    )
