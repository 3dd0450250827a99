"""
异常处理 Behavior

统一处理 Handler 执行过程中的异常：
- 将领域异常（DomainException）转换为应用层异常
- 按异常类型确定命令行退出码
- 记录异常日志

执行顺序：在 ValidationBehavior 之后，LoggingBehavior 之前
"""

from typing import Any, Callable, Awaitable, Dict, Type
from dataclasses import dataclass, field

from domain.common.exceptions import (
    DomainException,
    DomainValidationException,
    InfeasibleDemandException,
    InvalidOperationException,
    InvalidValueObjectException,
    ScenarioValidationException,
    UnnormalizedWeightsException,
    UserSetMismatchException,
)
from infrastructure.logging import get_logger
from infrastructure.serialization.scenario_file import ScenarioFileException

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3


@dataclass
class ApplicationError:
    """
    应用层错误

    统一的错误格式，由命令行转换为 stderr 诊断和退出码。
    """
    code: str
    message: str
    exit_code: int
    details: Dict[str, Any] = field(default_factory=dict)


class ApplicationException(Exception):
    """
    应用层异常

    携带 ApplicationError 信息，供命令行处理。
    """

    def __init__(self, error: ApplicationError):
        self.error = error
        super().__init__(error.message)


# 异常 -> 退出码映射
EXCEPTION_EXIT_CODE_MAP: Dict[Type[Exception], int] = {
    ScenarioValidationException: EXIT_VALIDATION,
    InfeasibleDemandException: EXIT_VALIDATION,
    UnnormalizedWeightsException: EXIT_VALIDATION,
    UserSetMismatchException: EXIT_VALIDATION,
    InvalidValueObjectException: EXIT_VALIDATION,
    DomainValidationException: EXIT_VALIDATION,
    InvalidOperationException: EXIT_VALIDATION,
    ScenarioFileException: EXIT_VALIDATION,
    OSError: EXIT_IO,
}


def exit_code_for(exception: Exception) -> int:
    """按映射表找退出码，未列出的领域异常视为验证错误，其余为 1"""
    for exc_type, exit_code in EXCEPTION_EXIT_CODE_MAP.items():
        if isinstance(exception, exc_type):
            return exit_code
    if isinstance(exception, DomainException):
        return EXIT_VALIDATION
    return EXIT_USAGE


class ExceptionBehavior:
    """
    异常处理 Behavior

    捕获 Handler 中的异常并转换为统一格式。
    """

    async def handle(
        self,
        request: Any,
        next_handler: Callable[[], Awaitable[Any]]
    ) -> Any:
        request_name = type(request).__name__

        try:
            return await next_handler()

        except ApplicationException:
            # 已经是应用层异常，直接抛出
            raise

        except (DomainException, ScenarioFileException) as e:
            logger.warning(f"{request_name} rejected: {e.code} - {e.message}")
            raise ApplicationException(
                ApplicationError(
                    code=e.code,
                    message=e.message,
                    exit_code=exit_code_for(e),
                    details=self._extract_details(e),
                )
            ) from e

        except OSError as e:
            logger.warning(f"{request_name} I/O failure: {e}")
            raise ApplicationException(
                ApplicationError(
                    code="IO_ERROR",
                    message=str(e),
                    exit_code=EXIT_IO,
                    details={"filename": str(e.filename)} if e.filename else {},
                )
            ) from e

        except Exception as e:
            logger.exception(f"{request_name} unexpected exception: {type(e).__name__}: {e}")
            raise ApplicationException(
                ApplicationError(
                    code="INTERNAL_ERROR",
                    message=f"{type(e).__name__}: {e}",
                    exit_code=EXIT_USAGE,
                    details={"exception_type": type(e).__name__},
                )
            ) from e

    def _extract_details(self, exception: Exception) -> Dict[str, Any]:
        """提取异常的自定义属性"""
        details = {}
        for attr, value in vars(exception).items():
            if attr.startswith("_") or attr in ("message", "code"):
                continue
            if value is not None:
                details[attr] = value if isinstance(value, list) else str(value)
        return details


def register_exception_behavior() -> None:
    """
    注册异常处理 Behavior 到 mediatr

    ExceptionBehavior 应该在 ValidationBehavior 之后执行。
    """
    import mediatr

    if Any not in mediatr.__behaviors__:
        mediatr.__behaviors__[Any] = []

    if ExceptionBehavior not in mediatr.__behaviors__[Any]:
        insert_pos = 1 if len(mediatr.__behaviors__[Any]) > 0 else 0
        mediatr.__behaviors__[Any].insert(insert_pos, ExceptionBehavior)
        logger.debug("ExceptionBehavior registered")
