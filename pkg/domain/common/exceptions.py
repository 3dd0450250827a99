from typing import Optional, Any, List
from abc import ABC


class DomainException(Exception, ABC):
    """
    领域异常基类

    所有领域层异常都应该继承此类。
    领域异常表示分配模型的约束被违反或输入不可计算。
    """

    def __init__(
        self,
        message: str,
        code: Optional[str] = None
    ):
        self.message = message
        self.code = code or self.__class__.__name__
        super().__init__(self.message)


class DomainValidationException(DomainException):
    """领域验证异常"""

    def __init__(self, field: str, value: Any, message: str):
        self.field = field
        self.value = value
        super().__init__(
            message=f"Validation failed for {field}: {message}",
            code="DOMAIN_VALIDATION_ERROR"
        )


class InvalidValueObjectException(DomainException):
    """无效值对象异常"""

    def __init__(self, value_object_type: str, value: Any, reason: str):
        self.value_object_type = value_object_type
        self.value = value
        super().__init__(
            message=f"Invalid {value_object_type}: {reason}",
            code="INVALID_VALUE_OBJECT"
        )


class InfeasibleDemandException(DomainException):
    """需求不可行异常：对容量为 0 的资源提出了正需求"""

    def __init__(self, resource_index: int, demand: int):
        self.resource_index = resource_index
        self.demand = demand
        super().__init__(
            message=(
                f"positive demand {demand} on resource {resource_index} "
                f"whose capacity is 0"
            ),
            code="INFEASIBLE_DEMAND"
        )


class ScenarioValidationException(DomainException):
    """场景验证异常，携带 validate_scenario 返回的全部错误"""

    def __init__(self, errors: List[str]):
        self.errors = list(errors)
        super().__init__(
            message="invalid scenario: " + "; ".join(self.errors),
            code="INVALID_SCENARIO"
        )


class UnnormalizedWeightsException(DomainException):
    """权重未归一化异常（PDRF 加权模式要求每种资源上 Σ_i w_ir = 1）"""

    def __init__(self, resource_index: int, total: Any):
        self.resource_index = resource_index
        self.total = total
        super().__init__(
            message=(
                f"weights on resource {resource_index} sum to {total}, expected 1"
            ),
            code="UNNORMALIZED_WEIGHTS"
        )


class UserSetMismatchException(DomainException):
    """两个分配结果的用户集合不一致"""

    def __init__(self, missing: List[Any], unexpected: List[Any]):
        self.missing = list(missing)
        self.unexpected = list(unexpected)
        super().__init__(
            message=(
                f"user sets differ: missing={self.missing} "
                f"unexpected={self.unexpected}"
            ),
            code="USER_SET_MISMATCH"
        )


class InvalidOperationException(DomainException):
    """无效操作异常"""

    def __init__(self, operation: str, reason: str):
        self.operation = operation
        super().__init__(
            message=f"Operation '{operation}' is invalid: {reason}",
            code="INVALID_OPERATION"
        )
