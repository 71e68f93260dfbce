import pytest

from edgeideals import enumerate_graphs


@pytest.fixture(scope="session")
def graphs_through_5():
    """One representative per isomorphism class, 1 to 5 vertices."""
    out = []
    for n in range(1, 6):
        out.extend(enumerate_graphs(n))
    return out


@pytest.fixture(scope="session")
def connected_through_6():
    out = []
    for n in range(1, 7):
        out.extend(enumerate_graphs(n, connected_only=True))
    return out
