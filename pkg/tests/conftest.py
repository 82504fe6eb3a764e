import pytest

from descent_polytopes.algebra import phi_series


@pytest.fixture(scope="session")
def phi10():
    """The f-polynomial series truncated at words of length 10 (built once)."""
    return phi_series(10)
