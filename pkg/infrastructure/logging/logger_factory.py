"""
日志工厂 - 基于 Loguru 的日志系统

所有日志写到 stderr；stdout 只留给命令输出。
级别与可选的文件输出来自 Settings（LOG_LEVEL / LOG_FILE）。
"""

import sys
from typing import Any, Optional

from loguru import logger

from infrastructure.config import get_settings

from .context import get_run_id

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[name]}</cyan> [{extra[run_id]}] - <level>{message}</level>"
)


def _inject_run_id(record: dict) -> None:
    record["extra"].setdefault("name", record["name"])
    record["extra"]["run_id"] = get_run_id() or "-"


class LoggerFactory:
    """日志工厂"""

    _initialized: bool = False
    _level: Optional[str] = None

    @classmethod
    def configure(cls, level: Optional[str] = None) -> None:
        """
        （重新）安装 sink

        Args:
            level: 覆盖 LOG_LEVEL，例如命令行 --verbose 传入 "DEBUG"
        """
        settings = get_settings()
        cls._level = (level or settings.log_level).upper()

        logger.remove()
        logger.configure(patcher=_inject_run_id)
        logger.add(sys.stderr, format=LOG_FORMAT, level=cls._level)
        if settings.log_file:
            logger.add(
                settings.log_file,
                format=LOG_FORMAT,
                rotation="50 MB",
                retention="10 days",
                level=cls._level,
            )
        cls._initialized = True

    @classmethod
    def get_logger(cls, name: str) -> Any:
        """
        获取日志器

        Args:
            name: 日志器名称（通常是 __name__）
        """
        if not cls._initialized:
            cls.configure()
        return logger.bind(name=name)


# 便捷函数

def get_logger(name: str = __name__) -> Any:
    """
    获取日志器（便捷函数）

    用法：
        from infrastructure.logging import get_logger

        logger = get_logger(__name__)
        logger.info("Hello, world!")
    """
    return LoggerFactory.get_logger(name)


def configure_logging(level: Optional[str] = None) -> None:
    LoggerFactory.configure(level)
