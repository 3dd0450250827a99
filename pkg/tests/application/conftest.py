import pytest

from infrastructure.containers import bootstrap


@pytest.fixture
def boot():
    return bootstrap(reset=True)


@pytest.fixture
def mediator(boot):
    return boot.app.mediator()
