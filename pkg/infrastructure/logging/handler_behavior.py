"""
Handler 层日志 Behavior

管线最内层：Handler 看到的异常在这里还是原始的领域异常或 OSError，
ExceptionBehavior 之后才把它们转成退出码。输入问题记 WARNING，
其余记 ERROR 并带 traceback。run id 由 patcher 注入。
"""

import time
from typing import Any, Awaitable, Callable

from pydantic import BaseModel

from domain.common import DomainException
from infrastructure.logging.logger_factory import get_logger
from infrastructure.serialization.scenario_file import ScenarioFileException

logger = get_logger(__name__)

_EXPECTED_FAILURES = (DomainException, ScenarioFileException, OSError, ValueError)


def describe_request(request: Any) -> str:
    """请求名加上显式给出的字段，例如 AllocateScenarioCommand(scenario_path='s.json', algo='pdrf')"""
    name = type(request).__name__
    if not isinstance(request, BaseModel):
        return name
    fields = request.model_dump(exclude_none=True, exclude_defaults=True)
    inner = ", ".join(f"{key}={value!r}" for key, value in fields.items())
    return f"{name}({inner})"


class LoggingBehavior:
    async def handle(self, request: Any, next_handler: Callable[[], Awaitable[Any]]) -> Any:
        label = describe_request(request)
        start = time.perf_counter()
        logger.info(">> {}", label)
        try:
            result = await next_handler()
        except _EXPECTED_FAILURES as e:
            elapsed = (time.perf_counter() - start) * 1000
            logger.warning("<< {} rejected after {:.0f}ms: {}: {}", label, elapsed, type(e).__name__, e)
            raise
        except Exception:
            elapsed = (time.perf_counter() - start) * 1000
            logger.exception("<< {} crashed after {:.0f}ms", label, elapsed)
            raise
        logger.info("<< {} done in {:.0f}ms", label, (time.perf_counter() - start) * 1000)
        return result


def register_logging_behavior() -> None:
    """追加在已注册 behavior 之后，即管线最内层。"""
    import mediatr

    behaviors = mediatr.__behaviors__.setdefault(Any, [])
    if LoggingBehavior not in behaviors:
        behaviors.append(LoggingBehavior)
        logger.debug("LoggingBehavior registered")
