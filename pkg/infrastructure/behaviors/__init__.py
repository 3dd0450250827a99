"""
CQRS Pipeline Behaviors

横切关注点的统一管理模块。

Pipeline 执行顺序（从外到内）：
1. ValidationBehavior  - 验证请求参数
2. ExceptionBehavior   - 异常捕获和转换（确定退出码）
3. LoggingBehavior     - 日志记录
4. Handler             - 实际业务逻辑

使用方式：
    from infrastructure.behaviors import register_all_behaviors

    # 在创建 Mediator 之前调用
    register_all_behaviors()
"""

from .validation_behavior import (
    ValidationBehavior,
    ValidationException,
    register_validation_behavior,
)
from .exception_behavior import (
    EXCEPTION_EXIT_CODE_MAP,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ExceptionBehavior,
    ApplicationException,
    ApplicationError,
    exit_code_for,
    register_exception_behavior,
)

from infrastructure.logging import get_logger

logger = get_logger(__name__)


def register_all_behaviors() -> None:
    """
    注册所有 Pipeline Behaviors

    注册顺序决定了执行顺序（先注册的先执行）。
    """
    register_validation_behavior()   # 1. 验证
    register_exception_behavior()    # 2. 异常处理
    # LoggingBehavior 在 handler_behavior.py 中单独注册

    logger.debug("All pipeline behaviors registered")


__all__ = [
    # Behaviors
    "ValidationBehavior",
    "ExceptionBehavior",
    # Exceptions
    "ValidationException",
    "ApplicationException",
    "ApplicationError",
    # 退出码
    "EXCEPTION_EXIT_CODE_MAP",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VALIDATION",
    "EXIT_IO",
    "exit_code_for",
    # Registration
    "register_all_behaviors",
    "register_validation_behavior",
    "register_exception_behavior",
]
