"""共享 fixtures：典型场景与场景文件"""

import json
import os

import pytest

os.environ.setdefault("APP_ENV", "test")

from domain.allocation import (  # noqa: E402
    DemandVector,
    ResourceVector,
    Scenario,
    UserDemand,
    WeightVector,
)


def make_scenario(resources, demands, weights=None) -> Scenario:
    """make_scenario((9, 18), {"A": (1, 4), "B": (3, 1)})"""
    users = tuple(
        UserDemand(
            id=user_id,
            demand=DemandVector(tuple(demand)),
            weight=WeightVector(tuple(weights[user_id])) if weights and user_id in weights else None,
        )
        for user_id, demand in demands.items()
    )
    return Scenario(resources=ResourceVector(tuple(resources)), users=users)


@pytest.fixture
def canonical_scenario() -> Scenario:
    return make_scenario((9, 18), {"A": (1, 4), "B": (3, 1)})


@pytest.fixture
def pareto_scenario() -> Scenario:
    return make_scenario((59, 19), {"A": (1, 4), "B": (3, 1)})


@pytest.fixture
def write_scenario(tmp_path):
    """把 dict 写成场景文件，返回路径字符串"""

    def _write(document, name="scenario.json") -> str:
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def canonical_file(write_scenario) -> str:
    return write_scenario({
        "resources": [9, 18],
        "users": [{"id": "A", "demand": [1, 4]}, {"id": "B", "demand": [3, 1]}],
    })


@pytest.fixture
def pareto_file(write_scenario) -> str:
    return write_scenario({
        "resources": [59, 19],
        "users": [{"id": "A", "demand": [1, 4]}, {"id": "B", "demand": [3, 1]}],
    })
