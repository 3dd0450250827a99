"""
场景文件读取

JSON 格式：
    {
        "schema_version": "1",            # 可选
        "resources": [9, 18],
        "users": [
            {"id": "A", "demand": [1, 4]},
            {"id": "B", "demand": [3, 1], "weight": ["1/2", "1/2"]}
        ]
    }

路径 "-" 表示从标准输入读取。所有错误都指明出错的字段。
"""

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError, field_validator

from domain.allocation import (
    DemandVector,
    ResourceVector,
    Scenario,
    UserDemand,
    WeightVector,
    ensure_valid,
)
from domain.common import DomainException
from infrastructure.logging import get_logger

logger = get_logger(__name__)

STDIN_PATH = "-"


class ScenarioFileException(Exception):
    """场景文件无法解析或字段不合法"""

    def __init__(self, source: str, errors: List[str]):
        self.source = source
        self.errors = list(errors)
        self.code = "INVALID_SCENARIO_FILE"
        self.message = f"{source}: " + "; ".join(self.errors)
        super().__init__(self.message)


class UserFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1)
    demand: List[StrictInt] = Field(min_length=1)
    weight: Optional[List[Union[StrictInt, str]]] = None

    @field_validator("weight")
    @classmethod
    def _parse_weights(cls, value):
        if value is None:
            return None
        parsed = []
        for item in value:
            try:
                parsed.append(str(Fraction(item)))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"weight {item!r} is not a rational number") from None
        return parsed


class ScenarioFileModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    schema_version: Optional[str] = None
    resources: List[StrictInt] = Field(min_length=1)
    users: List[UserFileModel] = Field(min_length=1)


def _to_domain(model: ScenarioFileModel, source: str) -> Scenario:
    errors: List[str] = []
    try:
        resources = ResourceVector(tuple(model.resources))
    except DomainException as e:
        raise ScenarioFileException(source, [f"resources: {e.message}"]) from e

    users = []
    for index, user in enumerate(model.users):
        try:
            weight = WeightVector(tuple(Fraction(w) for w in user.weight)) if user.weight else None
            users.append(UserDemand(id=user.id, demand=DemandVector(tuple(user.demand)), weight=weight))
        except DomainException as e:
            errors.append(f"users.{index} ({user.id}): {e.message}")
    if errors:
        raise ScenarioFileException(source, errors)
    return Scenario(resources=resources, users=tuple(users))


def parse_scenario(text: str, source: str = "<string>") -> Scenario:
    """解析 JSON 文本并执行场景校验"""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioFileException(source, [f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"]) from e

    try:
        model = ScenarioFileModel.model_validate(raw)
    except ValidationError as e:
        raise ScenarioFileException(
            source,
            [f"{'.'.join(str(p) for p in err['loc']) or '<root>'}: {err['msg']}" for err in e.errors()],
        ) from e

    scenario = _to_domain(model, source)
    ensure_valid(scenario)
    return scenario


class ScenarioReader:
    """从文件或标准输入读取场景"""

    def read(self, path: str) -> Scenario:
        if path == STDIN_PATH:
            logger.debug("reading scenario from stdin")
            return parse_scenario(sys.stdin.read(), source="<stdin>")
        text = Path(path).read_text(encoding="utf-8")
        logger.debug(f"read scenario file {path} ({len(text)} bytes)")
        return parse_scenario(text, source=path)
