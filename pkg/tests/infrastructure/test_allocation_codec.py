import json
from fractions import Fraction

from domain.allocation import (
    DrfOptions,
    cycle_profile,
    drf_allocate,
    edrf_allocate,
    pdrf_allocate,
    subcycle_schedule,
)
from infrastructure.serialization import (
    allocation_to_dict,
    divisible_to_dict,
    dumps,
    format_trace,
    fraction_text,
    pdrf_to_dict,
    profile_to_dict,
    schedule_to_dict,
    trace_to_dict,
    with_schema,
)


def test_fraction_text():
    assert fraction_text(Fraction(2, 9)) == "2/9"
    assert fraction_text(Fraction(4, 2)) == "2"
    assert fraction_text(3) == "3"


def test_allocation_document(canonical_scenario):
    allocation, _ = drf_allocate(canonical_scenario)
    document = allocation_to_dict(allocation, canonical_scenario)
    assert document["tasks"] == {"A": 3, "B": 2}
    assert document["per_user"] == {"A": [3, 12], "B": [6, 2]}
    assert document["residual"] == [0, 4]
    assert document["dominant_shares"] == {"A": "2/3", "B": "2/3"}


def test_trace_text_format(canonical_scenario):
    _, trace = drf_allocate(canonical_scenario)
    assert format_trace(trace) == "1\tB\t1/3\n2\tA\t2/9\n3\tA\t4/9\n4\tB\t2/3\n5\tA\t2/3\nhalt\tall-saturated\n"


def test_strict_trace_document(pareto_scenario):
    _, trace = drf_allocate(pareto_scenario, DrfOptions(strict_paper_mode=True))
    document = trace_to_dict(trace)
    assert document["halt_reason"] == "resource-exhausted"
    assert document["blocked_user"] == "A"
    assert document["steps"][0] == [1, "A", "4/19"]


def test_pdrf_document(pareto_scenario):
    document = pdrf_to_dict(pdrf_allocate(pareto_scenario))
    assert document["k"] == "19/8"
    assert document["per_user_multiplier"] == {"A": 2, "B": 9}
    assert document["allocation"]["consumed"] == [29, 17]


def test_divisible_document(canonical_scenario):
    document = divisible_to_dict(edrf_allocate(canonical_scenario))
    assert document["shares"] == {"A": "2/3", "B": "2/3"}
    assert document["used_fraction"] == ["1", "7/9"]
    assert document["rounds"] == [{"x": "2/3", "active_users": ["A", "B"], "saturated_resources": [0]}]


def test_cycle_documents(canonical_scenario):
    profile = profile_to_dict(cycle_profile(canonical_scenario))
    assert profile["lcm_ds"] == "2/3"
    assert profile["occurrences"] == {"A": 3, "B": 2}
    schedule = [schedule_to_dict(p) for p in subcycle_schedule(canonical_scenario)]
    assert schedule[0] == {
        "user": "A", "ratio": "3/2", "base": 1, "subcycles": 2, "extra_positions": [1], "gaps": [2],
    }


def test_documents_are_json_with_schema_version(canonical_scenario):
    text = dumps(with_schema(profile_to_dict(cycle_profile(canonical_scenario))))
    assert text.endswith("\n")
    parsed = json.loads(text)
    assert parsed["schema_version"] == "1"
    assert list(parsed)[0] == "schema_version"
