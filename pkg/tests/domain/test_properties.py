"""Property-based checks over small random scenarios."""

import math
from collections import defaultdict
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from domain.allocation import (
    ALLOCATOR_NAMES,
    DrfOptions,
    cycle_profile,
    drf_allocate,
    edrf_allocate,
    finishing_pass,
    get_allocator,
    pdrf_allocate,
    pdrf_k,
    pdrf_k_simplified,
    per_task_shares,
)
from tests.conftest import make_scenario
from tests.property_settings import ACCEPTANCE_SETTINGS, QUICK_SETTINGS, STANDARD_SETTINGS
from tests.strategies import scenarios


def _fits(demand, residual) -> bool:
    return all(d <= r for d, r in zip(demand, residual))


def _shares(scenario):
    return {u: ds.share for u, ds in per_task_shares(scenario).items()}


def _progressive_filling(scenario):
    """逐步模拟的朴素版本：每次线性扫描选出份额最小的可行用户"""
    shares = _shares(scenario)
    residual = list(scenario.resources)
    tasks = {u.id: 0 for u in scenario.users}
    saturated = set()
    while len(saturated) < scenario.n_users:
        candidates = [u for u in scenario.users if u.id not in saturated]
        user = min(candidates, key=lambda u: (tasks[u.id] * shares[u.id], -shares[u.id], u.id))
        if not _fits(user.demand, residual):
            saturated.add(user.id)
            continue
        residual = [r - d for r, d in zip(residual, user.demand)]
        tasks[user.id] += 1
    return tasks


@given(scenario=scenarios(), name=st.sampled_from(ALLOCATOR_NAMES))
@ACCEPTANCE_SETTINGS
def test_no_allocator_exceeds_capacity(scenario, name):
    allocation = get_allocator(name).allocate(scenario)
    assert allocation.consumed.fits_within(scenario.resources)
    assert all(count >= 0 for count in allocation.tasks.values())


@given(scenario=scenarios())
@ACCEPTANCE_SETTINGS
def test_simplified_k_is_k_times_max_share(scenario):
    max_share = max(_shares(scenario).values())
    assert pdrf_k_simplified(scenario) / max_share == pdrf_k(scenario)


@given(scenario=scenarios())
@STANDARD_SETTINGS
def test_pdrf_tasks_are_floor_of_cycle_share(scenario):
    result = pdrf_allocate(scenario)
    shares = _shares(scenario)
    target = result.k * max(shares.values())
    for user_id, count in result.allocation.tasks.items():
        gap = target - count * shares[user_id]
        assert 0 <= gap < shares[user_id]


@given(scenario=scenarios())
@STANDARD_SETTINGS
def test_drf_always_serves_the_lowest_feasible_share(scenario):
    _, trace = drf_allocate(scenario)
    shares = _shares(scenario)
    residual = list(scenario.resources)
    tasks = {u.id: 0 for u in scenario.users}
    for step in trace.steps:
        chosen_share = tasks[step.user_id] * shares[step.user_id]
        for user in scenario.users:
            if _fits(user.demand, residual):
                assert chosen_share <= tasks[user.id] * shares[user.id]
        residual = [r - d for r, d in zip(residual, scenario.user(step.user_id).demand)]
        tasks[step.user_id] += 1
        assert step.share == tasks[step.user_id] * shares[step.user_id]


@given(scenario=scenarios())
@STANDARD_SETTINGS
def test_drf_with_removal_is_non_wasteful(scenario):
    allocation, _ = drf_allocate(scenario)
    assert not any(_fits(u.demand, allocation.residual) for u in scenario.users)


@given(scenario=scenarios())
@STANDARD_SETTINGS
def test_finishing_pass_adds_at_most_one_task_each(scenario):
    result = pdrf_allocate(scenario)
    finished = finishing_pass(scenario, result)
    assert finished.consumed.fits_within(scenario.resources)
    for user_id, count in finished.tasks.items():
        assert count - result.allocation.tasks[user_id] in (0, 1)


@given(scenario=scenarios(max_users=5, max_resources=3))
@STANDARD_SETTINGS
def test_drf_matches_naive_progressive_filling(scenario):
    allocation, _ = drf_allocate(scenario)
    assert allocation.tasks == _progressive_filling(scenario)


@st.composite
def integer_ratio_pairs(draw):
    """两个用户、m ≥ 2 种等量资源，ds_Y = ratio · ds_X，容量至少容纳一个完整周期"""
    m = draw(st.integers(min_value=2, max_value=4))
    peak = draw(st.integers(min_value=1, max_value=5))
    ratio = draw(st.integers(min_value=1, max_value=8))

    def demand(top):
        index = draw(st.integers(min_value=0, max_value=m - 1))
        rest = draw(st.lists(st.integers(0, top), min_size=m, max_size=m))
        rest[index] = top
        return tuple(rest)

    capacity = draw(st.integers(min_value=2 * ratio * peak, max_value=10 * ratio * peak))
    scenario = make_scenario((capacity,) * m, {"X": demand(peak), "Y": demand(ratio * peak)})
    return scenario, ratio


@given(case=integer_ratio_pairs())
@ACCEPTANCE_SETTINGS
def test_integer_ratio_full_cycle_is_the_basic_subcycle(case):
    scenario, ratio = case
    profile = cycle_profile(scenario)
    assert profile.full_length == profile.basic_length == ratio + 1
    assert profile.occurrences == {"X": ratio, "Y": 1}

    _, trace = drf_allocate(scenario)
    first_cycle = trace.order()[: profile.full_length]
    assert {u: first_cycle.count(u) for u in profile.occurrences} == profile.occurrences


@given(scenario=scenarios(max_users=4, max_resources=2))
@QUICK_SETTINGS
def test_strict_mode_never_allocates_more_than_removal(scenario):
    strict, _ = drf_allocate(scenario, DrfOptions(strict_paper_mode=True))
    removal, _ = drf_allocate(scenario)
    assert strict.total_tasks <= removal.total_tasks
    assert all(strict.tasks[u] <= removal.tasks[u] for u in strict.tasks)



@given(scenario=scenarios())
@STANDARD_SETTINGS
def test_edrf_users_active_in_the_same_rounds_get_equal_shares(scenario):
    result = edrf_allocate(scenario)
    groups = defaultdict(set)
    for user_id in scenario.user_ids:
        active_in = tuple(i for i, record in enumerate(result.rounds) if user_id in record.active_users)
        groups[active_in].add(result.shares[user_id])
        assert result.shares[user_id] == sum((result.rounds[i].x for i in active_in), Fraction(0))
    assert all(len(shares) == 1 for shares in groups.values())


@st.composite
def exact_fit_scenarios(draw):
    """等量容量、需求全为正；每人 L / peak 个任务时主导份额相同，且某资源恰好用尽"""
    n = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=1, max_value=3))
    demands = draw(
        st.lists(st.lists(st.integers(1, 6), min_size=m, max_size=m), min_size=n, max_size=n)
    )
    level = math.lcm(*(max(d) for d in demands)) * draw(st.integers(min_value=1, max_value=3))
    tasks = [level // max(d) for d in demands]
    capacity = max(sum(t * d[r] for t, d in zip(tasks, demands)) for r in range(m))
    scenario = make_scenario((capacity,) * m, {f"u{i}": tuple(d) for i, d in enumerate(demands)})
    return scenario, {f"u{i}": t for i, t in enumerate(tasks)}


@given(case=exact_fit_scenarios())
@STANDARD_SETTINGS
def test_edrf_first_round_matches_drf_on_exact_fit(case):
    scenario, tasks = case
    allocation, _ = drf_allocate(scenario)
    assert allocation.tasks == tasks
    assert allocation.residual.amounts.count(0) >= 1

    result = edrf_allocate(scenario)
    assert len(result.rounds) == 1
    assert result.task_equivalents == tasks
    for user_id, amounts in allocation.per_user_amounts.items():
        assert result.amounts[user_id] == tuple(amounts)


def _single_resource_fill(scenario):
    """单资源 max-min 注水：每步在仍放得下的用户里给已得资源量最少者一个任务，
    并列时需求大者优先，再按 id"""
    (capacity,) = scenario.resources
    demand = {u.id: u.demand[0] for u in scenario.users}
    tasks = {u: 0 for u in demand}
    left = capacity
    while True:
        fitting = [u for u in demand if demand[u] <= left]
        if not fitting:
            return tasks
        user = min(fitting, key=lambda u: (tasks[u] * demand[u], -demand[u], u))
        tasks[user] += 1
        left -= demand[user]


@given(scenario=scenarios(max_resources=1))
@STANDARD_SETTINGS
def test_single_resource_drf_is_max_min_fill(scenario):
    allocation, _ = drf_allocate(scenario)
    assert allocation.tasks == _single_resource_fill(scenario)

    # 可分割情形下每人恰好分得 1/n 的资源
    result = edrf_allocate(scenario)
    (capacity,) = scenario.resources
    assert all(a == (Fraction(capacity, scenario.n_users),) for a in result.amounts.values())


@given(scenario=scenarios())
@ACCEPTANCE_SETTINGS
def test_pdrf_trails_the_halting_reference_by_at_most_one_task(scenario):
    reference, _ = drf_allocate(scenario, DrfOptions(strict_paper_mode=True, collect_trace=False))
    result = pdrf_allocate(scenario)
    shares = _shares(scenario)
    max_ratio = max(shares.values()) / min(shares.values())
    for user_id, count in result.allocation.tasks.items():
        delta = count - reference.tasks[user_id]
        assert delta >= -1
        assert delta >= -max_ratio


def test_removal_reference_keeps_filling_resources_the_cycle_leaves_idle():
    # k 由资源 0 决定；资源 0 用尽后 B 在移除模式下独占资源 1
    scenario = make_scenario((10, 60), {"A": (2, 0), "B": (0, 1), "C": (1, 0)})
    result = pdrf_allocate(scenario)
    assert result.k == Fraction(5, 2)
    assert result.allocation.tasks == {"A": 2, "B": 30, "C": 5}

    removal, _ = drf_allocate(scenario)
    assert removal.tasks["B"] == 60
    assert result.allocation.tasks["B"] - removal.tasks["B"] == -30
