"""
Mediator 工厂

mediatr 只负责按请求类型找到 Handler 类；Handler 实例由这里从
AppContainer 的 Provider 取得，依赖（ScenarioReader、Settings、
StatsExporter）因此由容器注入。

    boot = bootstrap()
    outcome = await boot.app.mediator().send_async(AnalyzeCyclesQuery(scenario_path="s.json"))

没有在容器里登记、但构造函数需要参数的 Handler 会在第一次被调用时报
UnregisteredHandlerError，而不是在 handle 里才以 TypeError 失败。
"""

import inspect
from typing import Any, Callable, Dict, Optional, Type

from mediatr import Mediator

from infrastructure.behaviors import register_all_behaviors
from infrastructure.logging import get_logger
from infrastructure.logging.handler_behavior import register_logging_behavior

logger = get_logger(__name__)

HandlerProvider = Callable[[], Any]


class UnregisteredHandlerError(RuntimeError):
    def __init__(self, handler_class: Type):
        self.handler_class = handler_class
        super().__init__(
            f"{handler_class.__name__} needs constructor arguments but has no provider; "
            "add it to wire_handlers()"
        )


def _needs_arguments(cls: Type) -> bool:
    try:
        parameters = inspect.signature(cls).parameters.values()
    except (TypeError, ValueError):
        return False
    return any(
        p.default is inspect.Parameter.empty
        and p.kind not in (inspect.Parameter.VAR_POSITIONAL, inspect.Parameter.VAR_KEYWORD)
        for p in parameters
    )


class MediatorFactory:
    """Handler 类到容器 Provider 的映射，以及据此创建的 Mediator。"""

    def __init__(self) -> None:
        self._providers: Dict[Type, HandlerProvider] = {}

    @property
    def registered_handlers(self) -> tuple[Type, ...]:
        return tuple(self._providers)

    def register_handlers(self, handlers: Dict[Type, HandlerProvider]) -> None:
        # 重复 bootstrap(reset=True) 时后登记的 Provider 覆盖旧的
        self._providers.update(handlers)
        logger.debug("{} handler provider(s) wired", len(self._providers))

    def resolve(self, handler_class: Type, is_behavior: bool = False) -> Any:
        provider = self._providers.get(handler_class)
        if provider is not None:
            return provider()
        # behaviors 与无参 Handler 直接实例化
        if not is_behavior and _needs_arguments(handler_class):
            raise UnregisteredHandlerError(handler_class)
        return handler_class()

    def create_mediator(self) -> Mediator:
        return Mediator(handler_class_manager=self.resolve)


_factory: Optional[MediatorFactory] = None


def get_mediator_factory() -> MediatorFactory:
    """全局工厂；第一次调用时按 Validation -> Exception -> Logging 注册管线。"""
    global _factory
    if _factory is None:
        register_all_behaviors()
        register_logging_behavior()
        _factory = MediatorFactory()
    return _factory


def create_mediator() -> Mediator:
    return get_mediator_factory().create_mediator()
