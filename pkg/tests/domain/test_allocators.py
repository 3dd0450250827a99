import pytest

from domain.allocation import ALLOCATOR_NAMES, Allocator, get_allocator
from domain.common import DomainValidationException


def test_registry_names():
    assert ALLOCATOR_NAMES == ("drf", "drf-strict", "pdrf", "pdrf-finished", "edrf-floor")


@pytest.mark.parametrize("name", ALLOCATOR_NAMES)
def test_every_allocator_shares_the_interface(name, canonical_scenario):
    allocator = get_allocator(name)
    assert isinstance(allocator, Allocator)
    assert allocator.name == name
    allocation = allocator.allocate(canonical_scenario)
    assert allocation.tasks == {"A": 3, "B": 2}


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("drf", {"A": 2, "B": 11}),
        ("drf-strict", {"A": 2, "B": 8}),
        ("pdrf", {"A": 2, "B": 9}),
        ("pdrf-finished", {"A": 2, "B": 10}),
    ],
)
def test_pareto_scenario_per_allocator(name, expected, pareto_scenario):
    assert get_allocator(name).allocate(pareto_scenario).tasks == expected


def test_unknown_allocator():
    with pytest.raises(DomainValidationException) as excinfo:
        get_allocator("round-robin")
    assert "pdrf-finished" in excinfo.value.message
