import pytest

from partcat import IDENTITY, PAIR, Partition, construct_closure

FORK = Partition([1], [1, 1])
CROSSING = Partition([1, 2], [2, 1])


@pytest.fixture(scope="session")
def nc_closure_6():
    """Closure of {fork, identity, pair} at bound 6, shared across modules."""
    return construct_closure([FORK, IDENTITY, PAIR], 6)
