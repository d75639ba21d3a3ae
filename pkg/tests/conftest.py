import pytest

from parikhgraph import graphs


@pytest.fixture
def c6():
    return graphs.cycle_graph(6)


@pytest.fixture
def k22():
    return graphs.complete_bipartite(2, 2)
