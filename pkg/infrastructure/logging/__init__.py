"""
日志模块

使用方式：
    from infrastructure.logging import get_logger

    logger = get_logger(__name__)
    logger.info("Hello, world!")

命令行入口在启动时调用 configure_logging() 并 set_run_id()。
"""

from .context import get_run_id, set_run_id
from .logger_factory import LoggerFactory, configure_logging, get_logger

__all__ = ["LoggerFactory", "configure_logging", "get_logger", "get_run_id", "set_run_id"]
