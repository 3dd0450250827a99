"""
验证 Behavior（管线最外层）

CLI 构造请求时 pydantic 已经校验过一次；这里对 model_construct 或
测试里手工拼出的请求再校验一遍，包括 model_validator 里的跨字段规则
（例如 bench 要么给 preset，要么给全 users / resources / 区间）。
"""

from typing import Any, Awaitable, Callable, List, Optional

from pydantic import BaseModel, ValidationError

from infrastructure.logging import get_logger

logger = get_logger(__name__)


def _field_errors(error: ValidationError) -> List[dict]:
    return [
        {
            # 跨字段规则没有 loc，记为 "request"
            "field": ".".join(str(part) for part in err["loc"]) or "request",
            "message": err["msg"],
            "type": err["type"],
        }
        for err in error.errors()
    ]


class ValidationException(Exception):
    code = "INVALID_REQUEST"

    def __init__(self, errors: List[dict], request_type: str):
        self.errors = errors
        self.request_type = request_type
        self.message = f"{request_type}: " + "; ".join(f"{e['field']}: {e['message']}" for e in errors)
        super().__init__(self.message)

    @classmethod
    def from_pydantic(cls, error: ValidationError, request_type: str) -> "ValidationException":
        return cls(_field_errors(error), request_type)


def revalidate(request: Any) -> Optional[ValidationException]:
    """非 pydantic 请求直接放行"""
    if not isinstance(request, BaseModel):
        return None
    try:
        type(request).model_validate(request.model_dump())
    except ValidationError as e:
        return ValidationException.from_pydantic(e, type(request).__name__)
    return None


class ValidationBehavior:
    async def handle(self, request: Any, next_handler: Callable[[], Awaitable[Any]]) -> Any:
        failure = revalidate(request)
        if failure is not None:
            logger.warning("{} rejected: {} field error(s)", failure.request_type, len(failure.errors))
            raise failure
        return await next_handler()


def register_validation_behavior() -> None:
    import mediatr

    behaviors = mediatr.__behaviors__.setdefault(Any, [])
    if ValidationBehavior not in behaviors:
        behaviors.insert(0, ValidationBehavior)
        logger.debug("ValidationBehavior registered")
