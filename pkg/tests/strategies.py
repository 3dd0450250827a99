"""Hypothesis strategies for small random scenarios"""

from hypothesis import strategies as st

from domain.allocation import DemandVector, ResourceVector, Scenario, UserDemand


@st.composite
def scenarios(draw, max_users=6, max_resources=4, max_demand=9, max_reserve=60):
    m = draw(st.integers(min_value=1, max_value=max_resources))
    n = draw(st.integers(min_value=1, max_value=max_users))
    reserves = draw(st.lists(st.integers(1, max_reserve), min_size=m, max_size=m))
    demand = st.lists(st.integers(0, max_demand), min_size=m, max_size=m).filter(any)
    demands = draw(st.lists(demand, min_size=n, max_size=n))
    return Scenario(
        resources=ResourceVector(tuple(reserves)),
        users=tuple(
            UserDemand(id=f"u{i}", demand=DemandVector(tuple(d))) for i, d in enumerate(demands)
        ),
    )
