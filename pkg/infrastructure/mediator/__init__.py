"""Mediator 与 DI 容器的连接"""

from .setup import (
    MediatorFactory,
    UnregisteredHandlerError,
    create_mediator,
    get_mediator_factory,
)

__all__ = [
    "MediatorFactory",
    "UnregisteredHandlerError",
    "create_mediator",
    "get_mediator_factory",
]
