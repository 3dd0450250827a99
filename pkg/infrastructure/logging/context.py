"""
运行上下文

每次命令行调用生成一个 run id，所有日志行都带上它，
便于把同一次 bench 的多条日志串起来。
"""

import uuid
from contextvars import ContextVar
from typing import Optional

_run_id: ContextVar[Optional[str]] = ContextVar("run_id", default=None)


def get_run_id() -> Optional[str]:
    return _run_id.get()


def set_run_id(run_id: Optional[str] = None) -> str:
    """设置当前 run id；未给出时生成一个 8 位十六进制 id"""
    value = run_id or uuid.uuid4().hex[:8]
    _run_id.set(value)
    return value
