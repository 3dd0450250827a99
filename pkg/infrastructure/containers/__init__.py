"""
依赖注入容器

两层容器架构：
- InfraContainer: 基础设施（配置、场景读取、统计导出）
- AppContainer: 应用层（Mediator、Handlers）

使用 Bootstrap 作为组合根，连接所有容器。

使用示例：
    from infrastructure.containers import bootstrap

    boot = bootstrap()
    settings = boot.infra.settings()
    mediator = boot.app.mediator()
"""

from .infrastructure import InfraContainer
from .application import AppContainer, wire_handlers
from .bootstrap import Bootstrap, bootstrap

__all__ = [
    # 容器
    "InfraContainer",
    "AppContainer",
    "Bootstrap",
    # 便捷函数
    "bootstrap",
    "wire_handlers",
]
