import pytest

from limitroots import enumerate_elements, make_system


@pytest.fixture(scope="session")
def sys_u1():
    """Rank-3 universal system with unit infinity labels."""
    return make_system("universal3:1")


@pytest.fixture(scope="session")
def sys_u11():
    """Rank-3 universal system with c = 1.1 (strictly Lorentzian pairs)."""
    return make_system("universal3:1.1")


@pytest.fixture(scope="session")
def store_u1_6(sys_u1):
    """All elements of the rank-3 universal group up to length 6."""
    return enumerate_elements(sys_u1, 6)
