"""
领域层通用基础类

值对象基类与领域异常体系，供 allocation / experiments 两个子领域共用。
"""

from .base_value_object import BaseValueObject
from .domain_service import DomainService
from .exceptions import (
    DomainException,
    DomainValidationException,
    InvalidValueObjectException,
    InfeasibleDemandException,
    ScenarioValidationException,
    UnnormalizedWeightsException,
    UserSetMismatchException,
    InvalidOperationException,
)

ValueObject = BaseValueObject

__all__ = [
    "BaseValueObject",
    "ValueObject",
    "DomainService",
    # 异常
    "DomainException",
    "DomainValidationException",
    "InvalidValueObjectException",
    "InfeasibleDemandException",
    "ScenarioValidationException",
    "UnnormalizedWeightsException",
    "UserSetMismatchException",
    "InvalidOperationException",
]
