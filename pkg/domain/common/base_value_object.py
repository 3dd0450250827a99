from abc import ABC
from dataclasses import dataclass
from typing import Any, NoReturn

from .exceptions import InvalidValueObjectException


@dataclass(frozen=True)
class BaseValueObject(ABC):
    """值对象的基类。

    不可变、按值比较；构造完成后立即执行 validate()，
    因此任何存活的实例都满足自身的不变量。
    """

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        """子类在此检查不变量，违反时调用 _reject()"""

    def _reject(self, value: Any, reason: str) -> NoReturn:
        raise InvalidValueObjectException(type(self).__name__, value, reason)
