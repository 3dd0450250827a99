"""
Bootstrap（组合根）

这是整个应用的组合根，负责：
1. 创建并连接所有容器
2. 把 Handler Provider 注册到 MediatorFactory
3. 支持测试时替换依赖（override）

使用方式：
    from infrastructure.containers import bootstrap

    boot = bootstrap()
    mediator = boot.app.mediator()
    outcome = await mediator.send_async(ParetoDemoQuery())

    # 测试时替换依赖
    boot.infra.scenario_reader.override(providers.Object(FakeReader()))
"""

from typing import Optional
from dependency_injector import containers, providers

from .infrastructure import InfraContainer
from .application import AppContainer, wire_handlers


class Bootstrap(containers.DeclarativeContainer):
    """
    组合根 - 连接所有容器的顶层容器
    """

    # ============ 基础设施层（包含配置）============
    infra = providers.Container(InfraContainer)

    # ============ 应用层 ============
    app = providers.Container(
        AppContainer,
        infra=infra  # 注入基础设施容器
    )


# ============ 全局实例 ============

_bootstrap: Optional[Bootstrap] = None


def bootstrap(reset: bool = False) -> Bootstrap:
    """
    获取或创建 Bootstrap 实例（组合根）

    Args:
        reset: 是否重置全局实例（测试用）
    """
    global _bootstrap

    if _bootstrap is None or reset:
        _bootstrap = Bootstrap()
        wire_handlers(_bootstrap.app)

    return _bootstrap
