import pytest

from graphbraid.smallgraphs import connected_graphs_upto


@pytest.fixture(scope="session")
def catalog6():
    return connected_graphs_upto(6)


@pytest.fixture(scope="session")
def catalog7():
    return connected_graphs_upto(7)


@pytest.fixture(scope="session")
def catalog8():
    return connected_graphs_upto(8)
