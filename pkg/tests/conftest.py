import pytest

from chainlab import corpus


@pytest.fixture
def chain5():
    return corpus.chain_structure(5)


@pytest.fixture
def c4():
    return corpus.cycle_structure(4)


@pytest.fixture
def c5():
    return corpus.cycle_structure(5)


@pytest.fixture
def pentagon():
    return corpus.pentagon_cyclic_order()
